#include <functional>

#include "mvpref/proof.hpp"

namespace mvpref {

FrameClass frames_for(SystemId s) {
  switch (s) {
    case SystemId::M: return FrameClass::General;
    case SystemId::CM: return FrameClass::Crisp;
    default: return FrameClass::Preference;
  }
}

namespace {

// Every assignment of the schema's parameters over their domains. Order
// conditions are kept unless the schema is listed in drop.
std::vector<std::map<std::string, Element>> parameter_grid(const Schema& s, const Chain& chain,
                                                           bool keep_order) {
  std::vector<std::map<std::string, Element>> out{{}};
  for (const auto& [name, positive] : s.params) {
    std::vector<std::map<std::string, Element>> next;
    for (const auto& partial : out)
      for (Element e : positive ? chain.positives() : chain.elements()) {
        auto m = partial;
        m[name] = e;
        next.push_back(std::move(m));
      }
    out = std::move(next);
  }
  if (keep_order)
    std::erase_if(out, [&](const auto& m) {
      for (const auto& [lo, hi] : s.order)
        if (!(m.at(lo) <= m.at(hi))) return true;
      return false;
    });
  return out;
}

}  // namespace

std::vector<SuiteEntry> axiom_soundness_suite(SystemId s, SearchBounds bounds,
                                              const SuiteOptions& options) {
  const Chain& chain = *bounds.chain;
  bounds.frames = frames_for(s);
  bounds.variables = {"p", "q"};
  const Formula p = var("p"), q = var("q");
  std::vector<Formula> pool{p, q, imp(p, q), conj(p, q)};
  for (Element c : chain.elements()) pool.push_back(cnst(chain, c));

  const SystemRules rules = schema_catalog(s, chain);
  std::vector<SuiteEntry> entries;
  for (const Schema& sc : rules.schemas) {
    const bool keep = !options.drop_order_conditions.count(sc.id);
    for (const auto& params : parameter_grid(sc, chain, keep)) {
      std::function<void(std::size_t, Match&)> fill = [&](std::size_t k, Match& m) {
        if (k == sc.metas.size()) {
          entries.push_back(SuiteEntry{sc.id, instantiate(sc, m, chain), {}});
          return;
        }
        for (const auto& f : pool) {
          m.metas[sc.metas[k]] = f;
          fill(k + 1, m);
        }
      };
      Match m;
      m.params = params;
      fill(0, m);
    }
  }
  if (s == SystemId::P || s == SystemId::PDelta) {
    // sbox(b) phi -> box(b) sbox(b) box(b) phi, derivable from I1, I2, K and Nec.
    for (Element b : chain.positives())
      for (const auto& f : pool)
        entries.push_back(SuiteEntry{
            "SBoxBoxChain",
            imp(sbox(chain, b, f), box(chain, b, sbox(chain, b, box(chain, b, f)))),
            {}});
  }

  std::vector<Query> queries;
  queries.reserve(entries.size());
  for (const auto& e : entries) queries.push_back(Query{{}, e.instance});
  auto verdicts = check_batch(queries, bounds);
  for (std::size_t i = 0; i < entries.size(); ++i) entries[i].verdict = std::move(verdicts[i]);
  return entries;
}

}  // namespace mvpref
