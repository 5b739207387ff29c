#ifndef MVPREF_PREFS_HPP_
#define MVPREF_PREFS_HPP_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/model.hpp"
#include "mvpref/search.hpp"

namespace mvpref {

/// Orderings between formulas defined from the preference relation:
///   EE: phi <= psi  :=  E(phi & dia psi)
///   AE: phi <= psi  :=  A(phi -> dia psi)
/// The strict variants use sdia; a context d conjoins d to both sides.
struct PrefKind {
  enum class Quantifier { EE, AE };
  Quantifier quantifier = Quantifier::AE;
  bool strict = false;
  std::optional<Formula> context;
};

class PrefError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// "ee" or "ae". The orderings "ea", "aa", "ea2" and "ae2" need the inverse
/// relation or a total preorder and are rejected with PrefError.
PrefKind::Quantifier pref_quantifier(std::string_view name);

Formula build_pref(const PrefKind& kind, Formula phi, Formula psi);

/// Value of the ordering; it is the same at every world, which is checked.
Element eval_pref(const Model& m, const PrefKind& kind, const Formula& phi,
                  const Formula& psi);

struct PrefCheck {
  std::string property;
  std::vector<Formula> premises;
  Formula conclusion;
  bool expected_valid = true;
  Verdict verdict;
};

/// Reflexivity and product-transitivity of the AE ordering, product
/// transitivity of its strict variant, the monotonicity bridge
/// A(phi -> psi) -> A(dia phi -> dia psi), graded modus ponens, and the
/// failing strict reflexivity p < p as a control. Variables are p, q, r;
/// the budget is raised to at least 1e9 to admit three variables.
std::vector<PrefCheck> preference_order_suite(SearchBounds bounds);

}  // namespace mvpref

#endif  // MVPREF_PREFS_HPP_
