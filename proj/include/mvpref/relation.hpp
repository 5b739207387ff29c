#ifndef MVPREF_RELATION_HPP_
#define MVPREF_RELATION_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvpref/lattice.hpp"

namespace mvpref {

class RelationError : public std::runtime_error {
 public:
  enum class Kind { DegenerateCut, NestingViolation, Shape };

  RelationError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Square matrix of chain elements, row = source world.
class FuzzyRelation {
 public:
  FuzzyRelation() = default;
  FuzzyRelation(std::size_t n, Element fill) : n_(n), m_(n * n, fill) {}
  FuzzyRelation(std::size_t n, std::vector<Element> entries);

  std::size_t size() const noexcept { return n_; }
  Element operator()(std::size_t u, std::size_t v) const { return m_[u * n_ + v]; }
  Element& operator()(std::size_t u, std::size_t v) { return m_[u * n_ + v]; }
  const std::vector<Element>& entries() const noexcept { return m_; }

  friend bool operator==(const FuzzyRelation&, const FuzzyRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Element> m_;
};

class CrispRelation {
 public:
  CrispRelation() = default;
  explicit CrispRelation(std::size_t n, bool fill = false)
      : n_(n), m_(n * n, fill) {}

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t u, std::size_t v) const { return m_[u * n_ + v]; }
  void set(std::size_t u, std::size_t v, bool x = true) { m_[u * n_ + v] = x; }
  std::size_t count() const;

  static CrispRelation identity(std::size_t n);
  static CrispRelation universal(std::size_t n) { return CrispRelation(n, true); }

  friend bool operator==(const CrispRelation&, const CrispRelation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> m_;
};

bool is_reflexive(const FuzzyRelation& r, const Chain& chain);
bool is_meet_transitive(const FuzzyRelation& r);

FuzzyRelation strict_part(const FuzzyRelation& r, const Chain& chain);
FuzzyRelation indifference(const FuzzyRelation& r);
CrispRelation cut(const FuzzyRelation& r, Element b);
/// (P_b)^< : P(u,v) >= b and P(v,u) < b. Throws DegenerateCut at bottom.
CrispRelation strict_of_cut(const FuzzyRelation& r, const Chain& chain,
                            Element b);
/// (P^<)_b : P(u,v) >= b and P(u,v) > P(v,u).
CrispRelation cut_of_strict(const FuzzyRelation& r, const Chain& chain,
                            Element b);

enum class CutFamily { Nested, Arbitrary };

/// Pointwise max{b : (u,v) in cuts[b]}, bottom when no level holds.
/// With CutFamily::Nested, a pair present at level a but missing at some
/// level b <= a raises NestingViolation naming the pair and both levels.
FuzzyRelation reconstruct_from_cuts(const std::map<Element, CrispRelation>& cuts,
                                    const Chain& chain,
                                    CutFamily family = CutFamily::Nested);

/// Least meet-transitive relation above r. Max-min Floyd-Warshall; rows of
/// each pivot step run in parallel.
FuzzyRelation meet_transitive_closure(const FuzzyRelation& r);
/// Literal fixpoint iteration of P(u,w) := P(u,w) v max_v (P(u,v) ^ P(v,w)).
FuzzyRelation meet_transitive_closure_reference(const FuzzyRelation& r);

bool is_reflexive(const CrispRelation& r);
bool is_irreflexive(const CrispRelation& r);
bool is_transitive(const CrispRelation& r);
bool is_symmetric(const CrispRelation& r);
bool is_subset(const CrispRelation& a, const CrispRelation& b);
/// Classical strict part {(u,v) : r(u,v) and not r(v,u)}.
CrispRelation crisp_strict_part(const CrispRelation& r);

}  // namespace mvpref

#endif  // MVPREF_RELATION_HPP_
