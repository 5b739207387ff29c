#ifndef MVPREF_FORMULA_HPP_
#define MVPREF_FORMULA_HPP_

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvpref/lattice.hpp"

namespace mvpref {

enum class Op {
  Var,
  Const,
  And,
  Or,
  Prod,
  Implies,
  Neg,
  Delta,
  BoxCut,   // box(b)
  DiaCut,   // dia(b)
  SBoxCut,  // sbox(b), b > 0
  SDiaCut,  // sdia(b), b > 0
  Box,
  Dia,
  SBox,
  SDia,
  Univ,   // A
  Exist,  // E
};

bool is_binary(Op op);
bool is_modal(Op op);
bool is_cut_modal(Op op);
bool is_strict_modal(Op op);
/// Keyword used by the concrete syntax ("box", "sdia", "A", "&", ...).
std::string_view op_symbol(Op op);

struct Node;

/// Immutable formula handle. Copying shares the tree.
class Formula {
 public:
  Formula() = default;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& operator*() const { return *node_; }
  const Node* operator->() const { return node_.get(); }
  const Node* get() const { return node_.get(); }
  explicit operator bool() const { return node_ != nullptr; }

  Op op() const;
  /// Structural equality; ignores source positions.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  std::shared_ptr<const Node> node_;
};

struct Node {
  Op op = Op::Var;
  std::string name;         // Var
  Element element;          // Const value or cut level
  std::string label;        // label text of element, kept for printing
  std::vector<Formula> kids;
  std::size_t pos = 0;      // byte offset in the parsed source
};

// Builders. Elements carry their label so a formula prints without a chain.
Formula var(std::string name);
Formula cnst(const Chain& chain, Element value);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula prod(Formula a, Formula b);
Formula imp(Formula a, Formula b);
Formula neg(Formula a);
Formula delta(Formula a);
Formula box(Formula a);
Formula dia(Formula a);
Formula sbox(Formula a);
Formula sdia(Formula a);
Formula box(const Chain& chain, Element level, Formula a);
Formula dia(const Chain& chain, Element level, Formula a);
/// Throws std::invalid_argument when level is bottom.
Formula sbox(const Chain& chain, Element level, Formula a);
Formula sdia(const Chain& chain, Element level, Formula a);
Formula univ(Formula a);
Formula exist(Formula a);
/// Generic unary/binary constructor; cut ops need the level overload.
Formula make(Op op, std::vector<Formula> kids);
Formula make_cut(Op op, const Chain& chain, Element level, Formula kid);

/// (a -> b) * (b -> a)
Formula iff(Formula a, Formula b);
/// delta(a <-> #c)
Formula approx(const Chain& chain, Formula a, Element c);
/// Left-nested conjunction; the empty conjunction is #top.
Formula conj_all(const Chain& chain, const std::vector<Formula>& parts);
/// Left-nested disjunction; the empty disjunction is #bottom.
Formula disj_all(const Chain& chain, const std::vector<Formula>& parts);

std::string print(const Formula& f);
std::size_t modal_depth(const Formula& f);
std::size_t size(const Formula& f);
std::set<std::string> variables(const Formula& f);
bool contains_op(const Formula& f, Op op);
/// Replaces variables by formulas, simultaneously.
Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& map);

class ParseError : public std::runtime_error {
 public:
  enum class Kind { Syntax, UnknownElement, ZeroStrictCut };

  ParseError(Kind kind, std::size_t pos, const std::string& what)
      : std::runtime_error(what), kind_(kind), pos_(pos) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return pos_; }

 private:
  Kind kind_;
  std::size_t pos_;
};

/// Grammar, loosest first: -> (right associative), |, &, *, then the prefix
/// operators ~ delta A E box dia sbox sdia and the cut forms box(b) etc.
/// Constants are #label. "box(" with no space always opens a cut level.
Formula parse(std::string_view text, const Chain& chain);

// Rewrites used to test definability claims. Each output is evaluated
// against the original in the test suites.

/// Replaces every diamond (fuzzy, cut, strict, strict cut) by the conjunction
/// over a of (box(phi -> #a) -> #a) with the matching box.
Formula desugar_dia_from_box(const Formula& f, const Chain& chain);
/// Replaces every box by the conjunction over a of
/// (dia(phi -> #a) -> #a) with the matching diamond.
Formula desugar_box_from_dia(const Formula& f, const Chain& chain);
/// Box/Dia/SBox/SDia via the cut modalities; A and E via box(0)/dia(0).
Formula desugar_graded_from_cuts(const Formula& f, const Chain& chain);
/// box(b) and sbox(b) via delta and the fuzzy diamonds. box(0) becomes A,
/// because the delta form does not define the bottom cut.
Formula desugar_cuts_via_delta(const Formula& f, const Chain& chain);

}  // namespace mvpref

#endif  // MVPREF_FORMULA_HPP_
