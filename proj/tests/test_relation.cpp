#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mvpref/examples.hpp"
#include "mvpref/relation.hpp"
#include "oracle.hpp"

using namespace mvpref;

namespace {

FuzzyRelation from_labels(const Chain& c, const std::vector<std::vector<std::string>>& rows) {
  std::vector<Element> e;
  for (const auto& r : rows)
    for (const auto& l : r) e.push_back(c.element(l));
  return FuzzyRelation(rows.size(), e);
}

/// Every preorder on n worlds over c, by brute force.
std::vector<FuzzyRelation> all_preorders(const Chain& c, std::size_t n) {
  std::vector<FuzzyRelation> out;
  const std::size_t cells = n * n;
  std::vector<std::size_t> digit(cells, 0);
  for (;;) {
    FuzzyRelation r(n, c.bottom());
    for (std::size_t i = 0; i < cells; ++i) r(i / n, i % n) = oracle::el(digit[i]);
    if (oracle::is_preorder(r, c)) out.push_back(r);
    std::size_t i = 0;
    while (i < cells && ++digit[i] == c.size()) digit[i++] = 0;
    if (i == cells) break;
  }
  return out;
}

Element oracle_strict(const FuzzyRelation& p, const Chain& c, std::size_t u, std::size_t v) {
  return p(u, v) > p(v, u) ? p(u, v) : c.bottom();
}

}  // namespace

TEST_CASE("restaurant preference relation") {
  const Model m = restaurant_model();
  const Chain& c = m.chain();
  const FuzzyRelation& p = m.relation();
  CHECK(is_reflexive(p, c));
  CHECK(is_meet_transitive(p));

  const FuzzyRelation s = strict_part(p, c);
  CHECK(c.label(s(1, 0)) == "0.8");  // bm over bf
  CHECK(s(0, 1) == c.bottom());
  for (std::size_t u = 0; u < 4; ++u) {
    CHECK(s(u, u) == c.bottom());
    for (std::size_t v = 0; v < 4; ++v) CHECK(s(u, v) == oracle_strict(p, c, u, v));
  }

  const FuzzyRelation ind = indifference(p);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = 0; v < 4; ++v) {
      if (u != v) CHECK(c.label(ind(u, v)) == "0.5");
      CHECK(ind(u, v) == ind(v, u));
      CHECK(p(u, v) == c.join(s(u, v), ind(u, v)));
    }

  CHECK(cut_of_strict(p, c, c.top()).count() == 0);
  const CrispRelation q8 = cut(p, c.element("0.8"));
  CHECK(q8(1, 0));
  CHECK(q8(2, 0));
  CHECK_FALSE(q8(0, 1));
}

TEST_CASE("preorder predicates") {
  const Chain c = Chain::lukasiewicz(3);
  FuzzyRelation id(2, c.bottom());
  id(0, 0) = id(1, 1) = c.top();
  CHECK(is_reflexive(id, c));
  CHECK(is_meet_transitive(id));
  FuzzyRelation half = id;
  half(1, 1) = c.element("0.5");
  CHECK_FALSE(is_reflexive(half, c));
  const FuzzyRelation bad = from_labels(c, {{"1", "1", "0"}, {"0", "1", "1"}, {"0", "0", "1"}});
  CHECK_FALSE(is_meet_transitive(bad));
}

TEST_CASE("two-point model over {0, b, 1}") {
  const Model m = two_point_model();
  const Chain& c = m.chain();
  const Element b = c.element("b");
  CHECK(cut(m.relation(), b) == CrispRelation::universal(2));
  CHECK(strict_of_cut(m.relation(), c, b).count() == 0);
  const CrispRelation cs = cut_of_strict(m.relation(), c, b);
  CHECK(cs.count() == 1);
  CHECK(cs(1, 0));  // (y, x)
}

TEST_CASE("cut edge cases") {
  const Model m = restaurant_model();
  const Chain& c = m.chain();
  CHECK(cut(m.relation(), c.bottom()) == CrispRelation::universal(4));
  try {
    (void)strict_of_cut(m.relation(), c, c.bottom());
    FAIL("bottom accepted");
  } catch (const RelationError& e) {
    CHECK(e.kind() == RelationError::Kind::DegenerateCut);
  }
  // crisp input at level 1: strict cut is the classical strict part
  const Chain c3 = Chain::lukasiewicz(3);
  const FuzzyRelation crisp = from_labels(c3, {{"1", "1", "1"}, {"0", "1", "1"}, {"0", "1", "1"}});
  const CrispRelation expected = crisp_strict_part(cut(crisp, c3.top()));
  CHECK(strict_of_cut(crisp, c3, c3.top()) == expected);
  CHECK(cut_of_strict(crisp, c3, c3.top()) == expected);
}

TEST_CASE("reconstruction") {
  const Model m = restaurant_model();
  const Chain& c = m.chain();
  std::map<Element, CrispRelation> cuts;
  for (Element b : c.elements()) cuts[b] = cut(m.relation(), b);
  CHECK(reconstruct_from_cuts(cuts, c) == m.relation());

  const Chain c2 = Chain::lukasiewicz(2);
  CrispRelation r(2);
  r.set(0, 1);
  const FuzzyRelation back = reconstruct_from_cuts({{c2.top(), r}}, c2);
  CHECK(back(0, 1) == c2.top());
  CHECK(back(1, 0) == c2.bottom());

  SUBCASE("non-nested input names the pair and levels") {
    const Chain c3 = Chain::lukasiewicz(3);
    CrispRelation hi(2), lo(2);
    hi.set(0, 1);
    try {
      (void)reconstruct_from_cuts({{c3.element("0.5"), lo}, {c3.top(), hi}}, c3);
      FAIL("nesting violation accepted");
    } catch (const RelationError& e) {
      CHECK(e.kind() == RelationError::Kind::NestingViolation);
      const std::string what = e.what();
      CHECK(what.find("0.5") != std::string::npos);
      CHECK(what.find("1") != std::string::npos);
    }
    const FuzzyRelation any =
        reconstruct_from_cuts({{c3.element("0.5"), lo}, {c3.top(), hi}}, c3, CutFamily::Arbitrary);
    CHECK(any(0, 1) == c3.top());
  }
}

TEST_CASE("relation properties on every preorder of 2 and 3 worlds over three values") {
  const Chain c = Chain::lukasiewicz(3);
  std::size_t checked = 0, failures = 0;
  for (std::size_t n : {2u, 3u}) {
    for (const FuzzyRelation& p : all_preorders(c, n)) {
      ++checked;
      const FuzzyRelation s = strict_part(p, c);
      if (!is_meet_transitive(s)) ++failures;
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
          if (s(u, v) != oracle_strict(p, c, u, v)) ++failures;
          if (s(u, v) > c.bottom() && s(v, u) > c.bottom()) ++failures;
        }
      std::map<Element, CrispRelation> weak, strict_cuts, cuts_of_strict;
      for (Element b : c.elements()) {
        const CrispRelation q = cut(p, b);
        if (!is_reflexive(q) || !is_transitive(q)) ++failures;
        for (Element a : c.elements())
          if (a <= b && !is_subset(q, cut(p, a))) ++failures;
        weak[b] = q;
        if (b == c.bottom()) continue;
        strict_cuts[b] = strict_of_cut(p, c, b);
        cuts_of_strict[b] = cut_of_strict(p, c, b);
        if (!is_subset(strict_cuts[b], cuts_of_strict[b])) ++failures;
      }
      if (reconstruct_from_cuts(weak, c) != p) ++failures;
      if (reconstruct_from_cuts(cuts_of_strict, c) != s) ++failures;
      if (reconstruct_from_cuts(strict_cuts, c, CutFamily::Arbitrary) != s) ++failures;
    }
  }
  CAPTURE(checked);
  CHECK(failures == 0);
  CHECK(checked > 100);
}

TEST_CASE("relation properties on random preorders") {
  oracle::Gen gen(42);
  std::size_t failures = 0;
  for (int i = 0; i < 200; ++i) {
    const Chain c = Chain::lukasiewicz(2 + gen.below(4));
    const std::size_t n = 1 + gen.below(5);
    const FuzzyRelation p = gen.preorder(c, n);
    const FuzzyRelation s = strict_part(p, c);
    if (!is_meet_transitive(s)) ++failures;
    for (Element b : c.positives()) {
      if (!is_subset(strict_of_cut(p, c, b), cut_of_strict(p, c, b))) ++failures;
      if (!is_irreflexive(strict_of_cut(p, c, b))) ++failures;
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("meet-transitive closure") {
  const Chain c = Chain::lukasiewicz(11);
  SUBCASE("adds the composed edge") {
    FuzzyRelation r(3, c.bottom());
    for (std::size_t u = 0; u < 3; ++u) r(u, u) = c.top();
    r(0, 1) = c.element("0.7");
    r(1, 2) = c.element("0.6");
    const FuzzyRelation cl = meet_transitive_closure(r);
    CHECK(c.label(cl(0, 2)) == "0.6");
    CHECK(cl == meet_transitive_closure_reference(r));
  }
  SUBCASE("fixpoint and idempotence") {
    const Model m = restaurant_model();
    CHECK(meet_transitive_closure(m.relation()) == m.relation());
    oracle::Gen gen(3);
    for (int i = 0; i < 100; ++i) {
      const std::size_t n = 1 + gen.below(7);
      const FuzzyRelation r = gen.relation(c, n);
      const FuzzyRelation cl = meet_transitive_closure(r);
      CHECK(is_meet_transitive(cl));
      CHECK(meet_transitive_closure(cl) == cl);
      CHECK(cl == meet_transitive_closure_reference(r));
      // least: the oracle closure with the diagonal kept as given
      FuzzyRelation naive = r;
      for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t u = 0; u < n; ++u)
          for (std::size_t v = 0; v < n; ++v)
            for (std::size_t w = 0; w < n; ++w)
              if (std::min(naive(u, v), naive(v, w)) > naive(u, w)) {
                naive(u, w) = std::min(naive(u, v), naive(v, w));
                changed = true;
              }
      }
      CHECK(cl == naive);
    }
  }
}

TEST_CASE("crisp helpers") {
  CrispRelation r(3);
  r.set(0, 1);
  r.set(1, 2);
  CHECK_FALSE(is_transitive(r));
  r.set(0, 2);
  CHECK(is_transitive(r));
  CHECK(is_irreflexive(r));
  CHECK_FALSE(is_symmetric(r));
  CHECK(is_subset(r, CrispRelation::universal(3)));
  CHECK(CrispRelation::identity(3).count() == 3);
  CHECK(is_reflexive(CrispRelation::identity(3)));
}
