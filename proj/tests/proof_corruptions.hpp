// Single-line corruptions of the bundled strict box chain proof, each with
// the line the checker must reject and the reason it must give.
#ifndef MVPREF_TESTS_PROOF_CORRUPTIONS_HPP_
#define MVPREF_TESTS_PROOF_CORRUPTIONS_HPP_

#include <sstream>
#include <string>
#include <vector>

#include "mvpref/proof.hpp"

namespace corruptions {

struct Case {
  std::size_t index;  // text line to replace (0 is the leading comment)
  std::string text;
  std::size_t line;   // proof line the checker must name
  mvpref::CheckResult::Reason reason;
};

inline std::vector<Case> strict_box_chain_cases() {
  using R = mvpref::CheckResult::Reason;
  return {
      {1, "1. sbox(0.5) p -> sbox(0.5) box(0.5) p ; ax I2 a=1 b=0.5", 1, R::ParamMismatch},
      {1, "1. sbox(0.5) p -> sbox(0.5) box(0.5) p ; ax I9", 1, R::UnknownSchema},
      {1, "1. box p -> p ; ax T", 1, R::Language},
      {2, "2. box(0.5) (sbox(0.5) p -> sbox(0.5) box(0.5) p) ; nec 1 1", 2, R::RuleMismatch},
      {2, "2. box(0.5) (sbox(0.5) p -> sbox(0.5) box(0.5) p) ; nex 0.5 1", 2, R::Syntax},
      {3,
       "4. box(0.5) (sbox(0.5) p -> sbox(0.5) box(0.5) p) -> (box(0.5) sbox(0.5) p -> box(0.5) "
       "sbox(0.5) box(0.5) p) ; ax K_b b=0.5",
       4, R::BadReference},
      {4, "4. box(0.5) sbox(0.5) p -> box(0.5) sbox(0.5) box(0.5) p ; mp 3 2", 4, R::RuleMismatch},
      {4, "4. box(0.5) sbox(0.5) p -> box(0.5) sbox(0.5) box(0.5) p ; mp 2 5", 4, R::BadReference},
      {5, "5. sbox(1) p -> box(0.5) sbox(1) p ; ax I1", 5, R::SideCondition},
      {6,
       "6. (sbox(0.5) p -> box(0.5) sbox(0.5) p) -> (sbox(0.5) p -> box(0.5) sbox(0.5) box(0.5) p) "
       "; taut",
       6, R::TautologyRefuted},
      {8, "8. sbox(0.5) p -> box(1) sbox(0.5) box(0.5) p ; mp 4 7", 8, R::RuleMismatch},
  };
}

/// The proof text with text line `index` replaced.
inline std::string apply(const std::string& proof, const Case& c) {
  std::istringstream in(proof);
  std::string out;
  std::size_t i = 0;
  for (std::string l; std::getline(in, l); ++i) out += (i == c.index ? c.text : l) + "\n";
  return out;
}

}  // namespace corruptions

#endif  // MVPREF_TESTS_PROOF_CORRUPTIONS_HPP_
