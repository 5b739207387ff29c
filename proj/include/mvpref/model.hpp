#ifndef MVPREF_MODEL_HPP_
#define MVPREF_MODEL_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/kernel.hpp"
#include "mvpref/lattice.hpp"
#include "mvpref/relation.hpp"

namespace mvpref {

/// variable -> value at each world (indexed like the model's worlds).
using Valuation = std::map<std::string, std::vector<Element>>;

class ModelError : public std::runtime_error {
 public:
  enum class Kind {
    Shape,
    NotReflexive,
    NotTransitive,
    UnboundVariable,
    UnsupportedModality,
    UnknownWorld,
    NotAnEquivalence,
    Precondition,
  };

  ModelError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// A Kripke model over a finite chain. Preference models carry a reflexive,
/// meet-transitive relation; general models carry any relation and reject
/// the strict modalities.
class Model {
 public:
  static Model preference(ChainPtr chain, std::vector<std::string> worlds,
                          FuzzyRelation rel, Valuation valuation);
  static Model general(ChainPtr chain, std::vector<std::string> worlds,
                       FuzzyRelation rel, Valuation valuation);

  bool is_preference() const noexcept { return preference_; }
  const Chain& chain() const noexcept { return *chain_; }
  const ChainPtr& chain_ptr() const noexcept { return chain_; }
  const std::vector<std::string>& worlds() const noexcept { return worlds_; }
  std::size_t size() const noexcept { return worlds_.size(); }
  /// Throws ModelError(UnknownWorld).
  std::size_t world_index(const std::string& name) const;
  const FuzzyRelation& relation() const noexcept { return rel_; }
  const Valuation& valuation() const noexcept { return valuation_; }

  StrictCuts strict_cuts() const noexcept { return strict_; }
  void set_strict_cuts(StrictCuts s) noexcept { strict_ = s; }

 private:
  Model(ChainPtr chain, std::vector<std::string> worlds, FuzzyRelation rel,
        Valuation valuation, bool preference);

  ChainPtr chain_;
  std::vector<std::string> worlds_;
  FuzzyRelation rel_;
  Valuation valuation_;
  bool preference_ = false;
  StrictCuts strict_ = StrictCuts::CutThenStrict;
};

/// Reflexivity and meet-transitivity, with the first failing witness.
std::optional<std::string> preorder_violation(const FuzzyRelation& rel,
                                              const Chain& chain,
                                              const std::vector<std::string>& worlds);

std::vector<Element> eval_all(const Model& m, const Formula& f);
Element eval(const Model& m, std::size_t world, const Formula& f);

struct LocalCheck {
  bool holds = true;
  std::optional<std::size_t> witness;  // world where premises are 1 but f < 1
};

LocalCheck holds_locally(const Model& m, const std::vector<Formula>& premises,
                         const Formula& f);

}  // namespace mvpref

#endif  // MVPREF_MODEL_HPP_
