#ifndef MVPREF_KERNEL_HPP_
#define MVPREF_KERNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/lattice.hpp"

namespace mvpref {

/// Which crisp relation the strict cut modalities quantify over.
enum class StrictCuts {
  CutThenStrict,  // (P_b)^< : P(v,w) >= b and P(w,v) < b
  StrictThenCut,  // (P^<)_b : P(v,w) >= b and P(v,w) > P(w,v)
};

struct Instr {
  Op op;
  std::uint32_t a = 0;  // first operand slot, or variable index for Var
  std::uint32_t b = 0;  // second operand slot
  Element e;            // constant or cut level
};

/// Formulas compiled to a post-order instruction list. Structurally equal
/// subformulas share one slot, so many related formulas can be evaluated in
/// one pass over a model.
class Program {
 public:
  /// Variables are numbered in the order given; each must cover every
  /// variable of every root (std::invalid_argument otherwise).
  Program(const std::vector<Formula>& roots, std::vector<std::string> vars);

  const std::vector<Instr>& code() const noexcept { return code_; }
  const std::vector<std::uint32_t>& roots() const noexcept { return roots_; }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  bool uses_strict() const noexcept { return uses_strict_; }

 private:
  std::vector<Instr> code_;
  std::vector<std::uint32_t> roots_;
  std::vector<std::string> vars_;
  bool uses_strict_ = false;
};

/// Evaluates every slot at every world.
///   rel:       n*n relation entries, row = source world
///   valuation: var-major, valuation[var*n + w]
///   out:       resized to code().size()*n, slot-major
void evaluate(const Program& program, const Chain& chain, std::size_t n,
              std::span<const Element> rel, std::span<const Element> valuation,
              std::vector<Element>& out,
              StrictCuts strict = StrictCuts::CutThenStrict);

}  // namespace mvpref

#endif  // MVPREF_KERNEL_HPP_
