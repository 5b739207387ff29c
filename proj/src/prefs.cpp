#include "mvpref/prefs.hpp"

#include <algorithm>

namespace mvpref {

PrefKind::Quantifier pref_quantifier(std::string_view name) {
  if (name == "ee") return PrefKind::Quantifier::EE;
  if (name == "ae") return PrefKind::Quantifier::AE;
  if (name == "ea" || name == "aa" || name == "ea2" || name == "ae2")
    throw PrefError("ordering '" + std::string(name) +
                    "' is not expressible with the forward modalities; it needs the "
                    "inverse preorder or a total preorder");
  throw PrefError("unknown ordering '" + std::string(name) + "' (expected ee or ae)");
}

Formula build_pref(const PrefKind& kind, Formula phi, Formula psi) {
  if (kind.context) {
    phi = conj(*kind.context, std::move(phi));
    psi = conj(*kind.context, std::move(psi));
  }
  Formula reach = kind.strict ? sdia(std::move(psi)) : dia(std::move(psi));
  if (kind.quantifier == PrefKind::Quantifier::EE)
    return exist(conj(std::move(phi), std::move(reach)));
  return univ(imp(std::move(phi), std::move(reach)));
}

Element eval_pref(const Model& m, const PrefKind& kind, const Formula& phi,
                  const Formula& psi) {
  const auto values = eval_all(m, build_pref(kind, phi, psi));
  if (values.empty()) throw ModelError(ModelError::Kind::Shape, "model has no worlds");
  if (std::adjacent_find(values.begin(), values.end(), std::not_equal_to<>()) != values.end())
    throw std::logic_error("preference value differs between worlds");
  return values.front();
}

std::vector<PrefCheck> preference_order_suite(SearchBounds bounds) {
  const Chain& chain = *bounds.chain;
  bounds.frames = FrameClass::Preference;
  bounds.variables = {"p", "q", "r"};
  bounds.budget = std::max(bounds.budget, 1e9);
  const Formula p = var("p"), q = var("q"), r = var("r");
  std::vector<Formula> pool{p, q, r, conj(p, q)};
  for (Element c : chain.elements()) pool.push_back(cnst(chain, c));

  const PrefKind weak{};
  PrefKind strict{};
  strict.strict = true;
  auto le = [&](const Formula& a, const Formula& b) { return build_pref(weak, a, b); };
  auto lt = [&](const Formula& a, const Formula& b) { return build_pref(strict, a, b); };

  std::vector<PrefCheck> out;
  auto add = [&](std::string name, std::vector<Formula> prem, Formula concl, bool expect) {
    out.push_back(PrefCheck{std::move(name), std::move(prem), std::move(concl), expect, {}});
  };
  for (const auto& a : pool) add("reflexive", {}, le(a, a), true);
  for (const auto& a : pool)
    for (const auto& b : pool)
      for (const auto& c : pool) {
        add("transitive", {}, imp(le(a, b), imp(le(b, c), le(a, c))), true);
        add("strict-transitive", {}, imp(lt(a, b), imp(lt(b, c), lt(a, c))), true);
      }
  for (const auto& a : pool)
    for (const auto& b : pool)
      add("monotonicity-bridge", {}, imp(univ(imp(a, b)), univ(imp(dia(a), dia(b)))), true);
  const Formula f1 = le(p, q), f2 = le(q, r);
  for (Element x : chain.elements())
    for (Element y : chain.elements())
      add("graded-modus-ponens",
          {imp(cnst(chain, x), f1), imp(cnst(chain, y), imp(f1, f2))},
          imp(cnst(chain, chain.mono(x, y)), f2), true);
  add("strict-reflexive", {}, lt(p, p), false);

  std::vector<Query> queries;
  for (const auto& c : out) queries.push_back(Query{c.premises, c.conclusion});
  auto verdicts = check_batch(queries, bounds);
  for (std::size_t i = 0; i < out.size(); ++i) out[i].verdict = std::move(verdicts[i]);
  return out;
}

}  // namespace mvpref
