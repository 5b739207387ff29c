#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mvpref/examples.hpp"
#include "mvpref/prefs.hpp"
#include "oracle.hpp"

using namespace mvpref;
using Q = PrefKind::Quantifier;

namespace {

/// Direct loops over P: dia psi at v, then the quantified combination.
Element direct(const Model& m, const PrefKind& k, const Formula& phi, const Formula& psi) {
  const Chain& c = m.chain();
  const std::size_t n = m.size();
  auto in_ctx = [&](const Formula& x, std::size_t w) {
    const Element e = oracle::eval(m, w, x);
    return k.context ? c.meet(oracle::eval(m, w, *k.context), e) : e;
  };
  Element acc = k.quantifier == Q::AE ? c.top() : c.bottom();
  for (std::size_t v = 0; v < n; ++v) {
    Element d = c.bottom();
    for (std::size_t w = 0; w < n; ++w) {
      const FuzzyRelation& p = m.relation();
      const Element r = k.strict ? (p(v, w) > p(w, v) ? p(v, w) : c.bottom()) : p(v, w);
      d = c.join(d, c.mono(r, in_ctx(psi, w)));
    }
    const Element a = in_ctx(phi, v);
    acc = k.quantifier == Q::AE ? c.meet(acc, oracle::residuum(c, a, d)) : c.join(acc, c.meet(a, d));
  }
  return acc;
}

}  // namespace

TEST_CASE("ordering formulas") {
  const Formula p = var("p"), q = var("q"), d = var("d");
  CHECK(print(build_pref({Q::EE, false, {}}, p, q)) == print(exist(conj(p, dia(q)))));
  CHECK(print(build_pref({Q::AE, false, {}}, p, q)) == print(univ(imp(p, dia(q)))));
  CHECK(print(build_pref({Q::AE, true, {}}, p, q)) == print(univ(imp(p, sdia(q)))));
  CHECK(build_pref({Q::AE, false, d}, p, q) == univ(imp(conj(d, p), dia(conj(d, q)))));

  CHECK(pref_quantifier("ee") == Q::EE);
  CHECK(pref_quantifier("ae") == Q::AE);
  for (const char* name : {"ea", "aa", "ea2", "ae2"}) CHECK_THROWS_AS((void)pref_quantifier(name), PrefError);
  CHECK_THROWS((void)pref_quantifier("zz"));
}

TEST_CASE("restaurant orderings") {
  const Model m = restaurant_model();
  const Chain& c = m.chain();
  const Formula l = light_meal(c), h = heavy_meal(c), b = var("b"), f = var("f"), meat = var("m");
  const PrefKind ae{Q::AE, false, {}}, ee{Q::EE, false, {}}, beach{Q::AE, false, b};
  auto label = [&](const PrefKind& k, const Formula& x, const Formula& y) {
    const Element e = eval_pref(m, k, x, y);
    CHECK(e == direct(m, k, x, y));
    return c.label(e);
  };
  CHECK(label(ae, l, h) == "0.5");
  CHECK(label(ae, h, l) == "0.7");
  CHECK(label(ae, f, meat) == "0.5");
  // meat worlds bm and cm reach fish at 0.8 and 0.6
  CHECK(label(ae, meat, f) == "0.6");
  CHECK(label(ee, f, meat) == "0.7");
  CHECK(label(ee, meat, f) == "0.8");
  CHECK(label(ae, conj(b, meat), conj(b, f)) == "0.8");
  CHECK(label(beach, l, h) == "0.5");
  CHECK(label(beach, h, l) == "0.9");
}

TEST_CASE("ordering values agree with direct loops and do not depend on the world") {
  oracle::Gen gen(77);
  const std::vector<std::string> vars{"p", "q"};
  std::size_t failures = 0;
  for (int i = 0; i < 300; ++i) {
    const auto c = std::make_shared<const Chain>(i % 2 ? Chain::lukasiewicz(2 + gen.below(5))
                                                       : Chain::godel(2 + gen.below(5)));
    const std::size_t n = 1 + gen.below(5);
    std::vector<std::string> names;
    for (std::size_t w = 0; w < n; ++w) names.push_back("w" + std::to_string(w));
    const Model m = Model::preference(c, names, gen.preorder(*c, n), gen.valuation(*c, n, vars));
    PrefKind k{gen.below(2) ? Q::AE : Q::EE, gen.below(2) == 0, {}};
    if (gen.below(3) == 0) k.context = gen.formula(*c, vars, 1);
    const Formula x = gen.formula(*c, vars, 2), y = gen.formula(*c, vars, 2);
    const auto column = eval_all(m, build_pref(k, x, y));
    for (Element e : column)
      if (e != column.front()) ++failures;
    if (eval_pref(m, k, x, y) != direct(m, k, x, y)) ++failures;
  }
  CHECK(failures == 0);
}

TEST_CASE("properties of the orderings in the bounded search") {
  SearchBounds b;
  b.chain = std::make_shared<const Chain>(Chain::lukasiewicz(3));
  b.max_worlds = 2;
  const auto checks = preference_order_suite(b);
  CHECK(checks.size() >= 6);
  bool saw_control = false;
  for (const PrefCheck& k : checks) {
    CAPTURE(k.property);
    CAPTURE(print(k.conclusion));
    CHECK(k.verdict.valid() == k.expected_valid);
    if (!k.expected_valid) saw_control = true;
  }
  CHECK(saw_control);
}
