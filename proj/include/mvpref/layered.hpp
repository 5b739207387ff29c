#ifndef MVPREF_LAYERED_HPP_
#define MVPREF_LAYERED_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/model.hpp"
#include "mvpref/relation.hpp"

namespace mvpref {

/// Worlds with one crisp weak relation per level and one crisp strict
/// relation per positive level.
struct LayeredModel {
  ChainPtr chain;
  std::vector<std::string> worlds;
  std::map<Element, CrispRelation> weak;    // every b in B
  std::map<Element, CrispRelation> strict;  // every b in B+
  Valuation valuation;
};

class LayeredError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Checks shape, weak nesting, reflexive and transitive weak layers,
/// strict inside weak, and transitive strict layers. Strict nesting is not
/// required here (see strict_nesting_violation).
void validate(const LayeredModel& lm);

struct LayerWitness {
  Element level;   // higher level for nesting witnesses
  Element lower;   // lower level (nesting only)
  std::size_t v = 0;
  std::size_t w = 0;
};

/// A pair strict at some level b but not strict at a lower positive level.
std::optional<LayerWitness> strict_nesting_violation(const LayeredModel& lm);

/// Q^<_b(v,w) iff Q_b(v,w) and not Q_b(w,v), for every positive b.
std::optional<LayerWitness> check_strict_part_condition(const LayeredModel& lm);

/// Weak layers are the cuts of P; strict layers follow the model's
/// StrictCuts choice ((P_b)^< by default).
LayeredModel derive_layered(const Model& m);

/// Strongly connected components of Q^<_b that contain a cycle, each sorted
/// by world index; the list is sorted by smallest member.
std::vector<std::vector<std::size_t>> find_clusters(const LayeredModel& lm,
                                                    Element b);

struct ClusterInfo {
  Element level;
  std::vector<std::size_t> members;  // source world indices
  std::optional<std::size_t> parent; // enclosing cluster at the nearest lower level
  std::vector<std::size_t> order;    // the strict linear order chosen
};

struct BulldozeReport {
  std::size_t copies = 0;
  std::vector<ClusterInfo> clusters;
  /// new world -> (source world, copy index)
  std::vector<std::pair<std::size_t, std::size_t>> origin;
};

/// Replaces each strict cluster by `copies` indexed copies of its members,
/// ordered lexicographically by (index, cluster order). Worlds outside all
/// clusters keep a single copy. Weak layers become the reflexive closures of
/// the strict ones; level 0 is universal.
std::pair<LayeredModel, BulldozeReport> bulldoze(const LayeredModel& lm,
                                                 std::size_t copies);

/// Reconstructs P from the weak layers. Requires a valid layered model with
/// universal level 0 and the strict-part condition.
Model to_preference_model(const LayeredModel& lm);

/// Submodel on the level-0 class of world v. Level 0 must be an equivalence.
LayeredModel restrict_to_level0_class(const LayeredModel& lm, std::size_t v);

/// Evaluation directly on the layers: cut modalities read the matching
/// layer, fuzzy ones use P(v,w) = max{b : Q_b(v,w)} and
/// P^<(v,w) = max{b : Q^<_b(v,w)}.
std::vector<Element> eval_all(const LayeredModel& lm, const Formula& f);

std::string describe(const BulldozeReport& report, const LayeredModel& source);

}  // namespace mvpref

#endif  // MVPREF_LAYERED_HPP_
