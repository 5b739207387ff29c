#include "mvpref/relation.hpp"

#include <algorithm>

namespace mvpref {

FuzzyRelation::FuzzyRelation(std::size_t n, std::vector<Element> entries)
    : n_(n), m_(std::move(entries)) {
  if (m_.size() != n * n)
    throw RelationError(RelationError::Kind::Shape,
                        "relation over " + std::to_string(n) + " worlds needs " +
                            std::to_string(n * n) + " entries, got " +
                            std::to_string(m_.size()));
}

std::size_t CrispRelation::count() const {
  return static_cast<std::size_t>(std::count(m_.begin(), m_.end(), true));
}

CrispRelation CrispRelation::identity(std::size_t n) {
  CrispRelation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  return r;
}

bool is_reflexive(const FuzzyRelation& r, const Chain& chain) {
  for (std::size_t u = 0; u < r.size(); ++u)
    if (r(u, u) != chain.top()) return false;
  return true;
}

bool is_meet_transitive(const FuzzyRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (std::min(r(u, v), r(v, w)) > r(u, w)) return false;
  return true;
}

FuzzyRelation strict_part(const FuzzyRelation& r, const Chain& chain) {
  FuzzyRelation out(r.size(), chain.bottom());
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r(u, v) > r(v, u)) out(u, v) = r(u, v);
  return out;
}

FuzzyRelation indifference(const FuzzyRelation& r) {
  FuzzyRelation out = r;
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      out(u, v) = std::min(r(u, v), r(v, u));
  return out;
}

CrispRelation cut(const FuzzyRelation& r, Element b) {
  CrispRelation out(r.size());
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r(u, v) >= b) out.set(u, v);
  return out;
}

CrispRelation strict_of_cut(const FuzzyRelation& r, const Chain& chain,
                            Element b) {
  if (b == chain.bottom())
    throw RelationError(RelationError::Kind::DegenerateCut,
                        "the strict part of a cut is only taken at positive "
                        "levels (the bottom cut is universal)");
  CrispRelation out(r.size());
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r(u, v) >= b && r(v, u) < b) out.set(u, v);
  return out;
}

CrispRelation cut_of_strict(const FuzzyRelation& r, const Chain& chain,
                            Element b) {
  return cut(strict_part(r, chain), b);
}

FuzzyRelation reconstruct_from_cuts(const std::map<Element, CrispRelation>& cuts,
                                    const Chain& chain, CutFamily family) {
  if (cuts.empty()) return FuzzyRelation(0, chain.bottom());
  const std::size_t n = cuts.begin()->second.size();
  for (const auto& [b, c] : cuts)
    if (c.size() != n)
      throw RelationError(RelationError::Kind::Shape,
                          "cut at level " + chain.label(b) + " has size " +
                              std::to_string(c.size()) + ", expected " +
                              std::to_string(n));
  FuzzyRelation out(n, chain.bottom());
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      std::optional<Element> missing;  // lowest level where the pair is absent
      for (const auto& [b, c] : cuts) {
        if (c(u, v)) {
          if (family == CutFamily::Nested && missing)
            throw RelationError(
                RelationError::Kind::NestingViolation,
                "cuts are not nested: pair (" + std::to_string(u) + "," +
                    std::to_string(v) + ") is in level " + chain.label(b) +
                    " but not in lower level " + chain.label(*missing));
          out(u, v) = b;
        } else if (!missing) {
          missing = b;
        }
      }
    }
  }
  return out;
}

FuzzyRelation meet_transitive_closure(const FuzzyRelation& r) {
  FuzzyRelation out = r;
  const long n = static_cast<long>(r.size());
  // Max-min paths; pivot order gives the closure in one sweep.
  for (long k = 0; k < n; ++k) {
#pragma omp parallel for schedule(static)
    for (long u = 0; u < n; ++u) {
      const Element uk = out(u, k);
      for (long w = 0; w < n; ++w) {
        const Element via = std::min(uk, out(k, w));
        if (via > out(u, w)) out(u, w) = via;
      }
    }
  }
  return out;
}

FuzzyRelation meet_transitive_closure_reference(const FuzzyRelation& r) {
  FuzzyRelation cur = r;
  const std::size_t n = r.size();
  for (;;) {
    FuzzyRelation next = cur;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t w = 0; w < n; ++w)
        for (std::size_t v = 0; v < n; ++v)
          next(u, w) = std::max(next(u, w), std::min(cur(u, v), cur(v, w)));
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_reflexive(const CrispRelation& r) {
  for (std::size_t u = 0; u < r.size(); ++u)
    if (!r(u, u)) return false;
  return true;
}

bool is_irreflexive(const CrispRelation& r) {
  for (std::size_t u = 0; u < r.size(); ++u)
    if (r(u, u)) return false;
  return true;
}

bool is_transitive(const CrispRelation& r) {
  const std::size_t n = r.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if (r(u, v))
        for (std::size_t w = 0; w < n; ++w)
          if (r(v, w) && !r(u, w)) return false;
  return true;
}

bool is_symmetric(const CrispRelation& r) {
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r(u, v) != r(v, u)) return false;
  return true;
}

bool is_subset(const CrispRelation& a, const CrispRelation& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t u = 0; u < a.size(); ++u)
    for (std::size_t v = 0; v < a.size(); ++v)
      if (a(u, v) && !b(u, v)) return false;
  return true;
}

CrispRelation crisp_strict_part(const CrispRelation& r) {
  CrispRelation out(r.size());
  for (std::size_t u = 0; u < r.size(); ++u)
    for (std::size_t v = 0; v < r.size(); ++v)
      if (r(u, v) && !r(v, u)) out.set(u, v);
  return out;
}

}  // namespace mvpref
