#include <algorithm>
#include <cmath>

#include "frames.hpp"
#include "mvpref/search.hpp"

namespace mvpref {

FrameSpace::FrameSpace(const Chain& chain, std::size_t n, FrameClass frames)
    : chain_(chain), n_(n), frames_(frames) {
  base_ = frames == FrameClass::Crisp ? 2 : chain.size();
  digits_ = frames == FrameClass::Preference ? n * n - n : n * n;
  count_ = 1;
  for (std::size_t i = 0; i < digits_; ++i) count_ *= base_;
}

bool FrameSpace::decode(std::uint64_t index, std::vector<Element>& rel) const {
  rel.assign(n_ * n_, chain_.bottom());
  for (std::size_t u = 0; u < n_; ++u) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (frames_ == FrameClass::Preference && u == v) {
        rel[u * n_ + v] = chain_.top();
        continue;
      }
      const auto digit = static_cast<std::uint16_t>(index % base_);
      index /= base_;
      rel[u * n_ + v] = frames_ == FrameClass::Crisp
                            ? (digit ? chain_.top() : chain_.bottom())
                            : Element{digit};
    }
  }
  if (frames_ != FrameClass::Preference) return true;
  for (std::size_t u = 0; u < n_; ++u)
    for (std::size_t v = 0; v < n_; ++v)
      for (std::size_t w = 0; w < n_; ++w)
        if (std::min(rel[u * n_ + v], rel[v * n_ + w]) > rel[u * n_ + w])
          return false;
  return true;
}

void decode_valuation(std::uint64_t index, std::size_t base, std::size_t slots,
                      std::vector<Element>& out) {
  out.resize(slots);
  for (std::size_t i = 0; i < slots; ++i) {
    out[i] = Element{static_cast<std::uint16_t>(index % base)};
    index /= base;
  }
}

std::vector<FuzzyRelation> enumerate_frames(const Chain& chain, std::size_t n,
                                            FrameClass frames) {
  FrameSpace space(chain, n, frames);
  std::vector<FuzzyRelation> out;
  std::vector<Element> rel;
  for (std::uint64_t i = 0; i < space.count(); ++i)
    if (space.decode(i, rel)) out.emplace_back(n, rel);
  return out;
}

double exhaustive_cardinality(const SearchBounds& bounds, std::size_t vars) {
  const double n = static_cast<double>(bounds.max_worlds);
  return std::pow(static_cast<double>(bounds.chain->size()),
                  n * n + n * static_cast<double>(vars));
}

}  // namespace mvpref
