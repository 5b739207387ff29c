#ifndef MVPREF_SRC_FRAMES_HPP_
#define MVPREF_SRC_FRAMES_HPP_

#include <cstdint>
#include <vector>

#include "mvpref/search.hpp"

namespace mvpref {

// Mixed-radix indexing of candidate relations. Preference frames fix the
// diagonal at top and keep only meet-transitive candidates.
class FrameSpace {
 public:
  FrameSpace(const Chain& chain, std::size_t n, FrameClass frames);

  std::uint64_t count() const noexcept { return count_; }
  /// Fills rel (row-major) and reports whether it belongs to the class.
  bool decode(std::uint64_t index, std::vector<Element>& rel) const;

 private:
  const Chain& chain_;
  std::size_t n_;
  FrameClass frames_;
  std::size_t base_ = 0;
  std::size_t digits_ = 0;
  std::uint64_t count_ = 0;
};

void decode_valuation(std::uint64_t index, std::size_t base, std::size_t slots,
                      std::vector<Element>& out);

}  // namespace mvpref

#endif  // MVPREF_SRC_FRAMES_HPP_
