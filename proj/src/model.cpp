#include "mvpref/model.hpp"

#include <algorithm>

namespace mvpref {

Model::Model(ChainPtr chain, std::vector<std::string> worlds, FuzzyRelation rel,
             Valuation valuation, bool preference)
    : chain_(std::move(chain)),
      worlds_(std::move(worlds)),
      rel_(std::move(rel)),
      valuation_(std::move(valuation)),
      preference_(preference) {
  using K = ModelError::Kind;
  if (worlds_.empty()) throw ModelError(K::Shape, "a model needs at least one world");
  if (rel_.size() != worlds_.size())
    throw ModelError(K::Shape, "relation is " + std::to_string(rel_.size()) +
                                   "x" + std::to_string(rel_.size()) + " but there are " +
                                   std::to_string(worlds_.size()) + " worlds");
  for (std::size_t i = 0; i < worlds_.size(); ++i)
    for (std::size_t j = i + 1; j < worlds_.size(); ++j)
      if (worlds_[i] == worlds_[j])
        throw ModelError(K::Shape, "duplicate world name '" + worlds_[i] + "'");
  for (Element e : rel_.entries())
    if (!chain_->contains(e))
      throw ModelError(K::Shape, "relation entry outside the chain");
  for (const auto& [name, vals] : valuation_) {
    if (vals.size() != worlds_.size())
      throw ModelError(K::Shape, "variable '" + name + "' has " +
                                     std::to_string(vals.size()) +
                                     " values, expected " +
                                     std::to_string(worlds_.size()));
    for (Element e : vals)
      if (!chain_->contains(e))
        throw ModelError(K::Shape, "value of '" + name + "' outside the chain");
  }
}

std::optional<std::string> preorder_violation(const FuzzyRelation& rel,
                                              const Chain& chain,
                                              const std::vector<std::string>& w) {
  const std::size_t n = rel.size();
  for (std::size_t u = 0; u < n; ++u)
    if (rel(u, u) != chain.top())
      return "not reflexive: P(" + w[u] + "," + w[u] + ") = " +
             chain.label(rel(u, u));
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t x = 0; x < n; ++x)
        if (std::min(rel(u, v), rel(v, x)) > rel(u, x))
          return "not meet-transitive: P(" + w[u] + "," + w[v] + ") = " +
                 chain.label(rel(u, v)) + ", P(" + w[v] + "," + w[x] +
                 ") = " + chain.label(rel(v, x)) + ", but P(" + w[u] + "," +
                 w[x] + ") = " + chain.label(rel(u, x));
  return std::nullopt;
}

Model Model::preference(ChainPtr chain, std::vector<std::string> worlds,
                        FuzzyRelation rel, Valuation valuation) {
  Model m(std::move(chain), std::move(worlds), std::move(rel),
          std::move(valuation), true);
  if (auto why = preorder_violation(m.rel_, *m.chain_, m.worlds_))
    throw ModelError(why->rfind("not reflexive", 0) == 0
                         ? ModelError::Kind::NotReflexive
                         : ModelError::Kind::NotTransitive,
                     "relation is " + *why);
  return m;
}

Model Model::general(ChainPtr chain, std::vector<std::string> worlds,
                     FuzzyRelation rel, Valuation valuation) {
  return Model(std::move(chain), std::move(worlds), std::move(rel),
               std::move(valuation), false);
}

std::size_t Model::world_index(const std::string& name) const {
  auto it = std::find(worlds_.begin(), worlds_.end(), name);
  if (it == worlds_.end())
    throw ModelError(ModelError::Kind::UnknownWorld, "unknown world '" + name + "'");
  return static_cast<std::size_t>(it - worlds_.begin());
}

namespace {

std::vector<std::vector<Element>> eval_roots(const Model& m,
                                             const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs) {
    auto v = variables(f);
    names.insert(v.begin(), v.end());
  }
  std::vector<std::string> vars(names.begin(), names.end());
  const std::size_t n = m.size();
  std::vector<Element> val;
  val.reserve(vars.size() * n);
  for (const auto& name : vars) {
    auto it = m.valuation().find(name);
    if (it == m.valuation().end())
      throw ModelError(ModelError::Kind::UnboundVariable,
                       "variable '" + name + "' has no value in the model");
    val.insert(val.end(), it->second.begin(), it->second.end());
  }
  Program prog(fs, vars);
  if (prog.uses_strict() && !m.is_preference())
    throw ModelError(ModelError::Kind::UnsupportedModality,
                     "strict modalities need a preference model");
  std::vector<Element> out;
  evaluate(prog, m.chain(), n, m.relation().entries(), val, out, m.strict_cuts());
  std::vector<std::vector<Element>> res;
  for (auto slot : prog.roots())
    res.emplace_back(out.begin() + slot * n, out.begin() + (slot + 1) * n);
  return res;
}

}  // namespace

std::vector<Element> eval_all(const Model& m, const Formula& f) {
  return eval_roots(m, {f}).front();
}

Element eval(const Model& m, std::size_t world, const Formula& f) {
  if (world >= m.size())
    throw ModelError(ModelError::Kind::UnknownWorld,
                     "world index " + std::to_string(world) + " out of range");
  return eval_all(m, f)[world];
}

LocalCheck holds_locally(const Model& m, const std::vector<Formula>& premises,
                         const Formula& f) {
  std::vector<Formula> all = premises;
  all.push_back(f);
  const auto vals = eval_roots(m, all);
  const Element top = m.chain().top();
  for (std::size_t v = 0; v < m.size(); ++v) {
    bool premises_hold = true;
    for (std::size_t i = 0; i < premises.size(); ++i)
      premises_hold = premises_hold && vals[i][v] == top;
    if (premises_hold && vals.back()[v] != top) return {false, v};
  }
  return {};
}

}  // namespace mvpref
