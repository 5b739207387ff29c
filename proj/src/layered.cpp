#include "mvpref/layered.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <unordered_map>

namespace mvpref {

namespace {

std::string pair_text(const LayeredModel& lm, std::size_t v, std::size_t w) {
  return "(" + lm.worlds[v] + "," + lm.worlds[w] + ")";
}

const CrispRelation& layer(const std::map<Element, CrispRelation>& layers,
                           Element b, const Chain& chain, const char* what) {
  auto it = layers.find(b);
  if (it == layers.end())
    throw LayeredError(std::string("missing ") + what + " layer at level " +
                       chain.label(b));
  return it->second;
}

CrispRelation transitive_closure(CrispRelation r) {
  const std::size_t n = r.size();
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t u = 0; u < n; ++u)
      if (r(u, k))
        for (std::size_t w = 0; w < n; ++w)
          if (r(k, w)) r.set(u, w);
  return r;
}

}  // namespace

void validate(const LayeredModel& lm) {
  if (!lm.chain) throw LayeredError("layered model has no chain");
  const Chain& chain = *lm.chain;
  const std::size_t n = lm.worlds.size();
  if (n == 0) throw LayeredError("layered model needs at least one world");
  for (const auto& [name, vals] : lm.valuation)
    if (vals.size() != n)
      throw LayeredError("variable '" + name + "' has " +
                         std::to_string(vals.size()) + " values, expected " +
                         std::to_string(n));
  for (const auto& [b, r] : lm.weak)
    if (r.size() != n) throw LayeredError("weak layer " + chain.label(b) + " has wrong size");
  for (const auto& [b, r] : lm.strict) {
    if (b == chain.bottom()) throw LayeredError("strict layers start at positive levels");
    if (r.size() != n) throw LayeredError("strict layer " + chain.label(b) + " has wrong size");
  }
  const CrispRelation* prev = nullptr;
  Element prev_level;
  for (Element b : chain.elements()) {
    const CrispRelation& q = layer(lm.weak, b, chain, "weak");
    for (std::size_t v = 0; v < n; ++v)
      if (!q(v, v))
        throw LayeredError("weak layer " + chain.label(b) + " is not reflexive at " +
                           lm.worlds[v]);
    if (!is_transitive(q))
      throw LayeredError("weak layer " + chain.label(b) + " is not transitive");
    if (prev && !is_subset(q, *prev)) {
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
          if (q(v, w) && !(*prev)(v, w))
            throw LayeredError("weak layers are not nested: " + pair_text(lm, v, w) +
                               " is in level " + chain.label(b) +
                               " but not in level " + chain.label(prev_level));
    }
    prev = &q;
    prev_level = b;
  }
  for (Element b : chain.positives()) {
    const CrispRelation& s = layer(lm.strict, b, chain, "strict");
    const CrispRelation& q = lm.weak.at(b);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (s(v, w) && !q(v, w))
          throw LayeredError("strict layer " + chain.label(b) + " contains " +
                             pair_text(lm, v, w) + " which its weak layer lacks");
    if (!is_transitive(s))
      throw LayeredError("strict layer " + chain.label(b) + " is not transitive");
  }
}

std::optional<LayerWitness> strict_nesting_violation(const LayeredModel& lm) {
  const Chain& chain = *lm.chain;
  const auto pos = chain.positives();
  for (std::size_t i = 0; i < pos.size(); ++i)
    for (std::size_t j = i + 1; j < pos.size(); ++j) {
      const auto& lo = lm.strict.at(pos[i]);
      const auto& hi = lm.strict.at(pos[j]);
      for (std::size_t v = 0; v < lo.size(); ++v)
        for (std::size_t w = 0; w < lo.size(); ++w)
          if (hi(v, w) && !lo(v, w)) return LayerWitness{pos[j], pos[i], v, w};
    }
  return std::nullopt;
}

std::optional<LayerWitness> check_strict_part_condition(const LayeredModel& lm) {
  const Chain& chain = *lm.chain;
  for (Element b : chain.positives()) {
    const auto& q = layer(lm.weak, b, chain, "weak");
    const auto& s = layer(lm.strict, b, chain, "strict");
    for (std::size_t v = 0; v < q.size(); ++v)
      for (std::size_t w = 0; w < q.size(); ++w)
        if (s(v, w) != (q(v, w) && !q(w, v))) return LayerWitness{b, b, v, w};
  }
  return std::nullopt;
}

LayeredModel derive_layered(const Model& m) {
  LayeredModel lm;
  lm.chain = m.chain_ptr();
  lm.worlds = m.worlds();
  lm.valuation = m.valuation();
  const Chain& chain = m.chain();
  for (Element b : chain.elements()) lm.weak[b] = cut(m.relation(), b);
  for (Element b : chain.positives())
    lm.strict[b] = m.strict_cuts() == StrictCuts::CutThenStrict
                       ? strict_of_cut(m.relation(), chain, b)
                       : cut_of_strict(m.relation(), chain, b);
  return lm;
}

std::vector<std::vector<std::size_t>> find_clusters(const LayeredModel& lm,
                                                    Element b) {
  const CrispRelation reach =
      transitive_closure(layer(lm.strict, b, *lm.chain, "strict"));
  const std::size_t n = reach.size();
  std::vector<bool> taken(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t v = 0; v < n; ++v) {
    if (taken[v] || !reach(v, v)) continue;
    std::vector<std::size_t> c;
    for (std::size_t w = 0; w < n; ++w)
      if (reach(v, w) && reach(w, v)) {
        c.push_back(w);
        taken[w] = true;
      }
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Inventory {
  std::vector<Element> levels;                                // positive levels
  std::vector<std::vector<std::vector<std::size_t>>> clusters;  // [level][id]
  std::vector<std::vector<int>> cluster_of;                    // [level][world]
};

Inventory take_inventory(const LayeredModel& lm) {
  Inventory inv;
  inv.levels = lm.chain->positives();
  const std::size_t n = lm.worlds.size();
  for (Element b : inv.levels) {
    inv.clusters.push_back(find_clusters(lm, b));
    std::vector<int> of(n, -1);
    for (std::size_t c = 0; c < inv.clusters.back().size(); ++c)
      for (std::size_t w : inv.clusters.back()[c]) of[w] = static_cast<int>(c);
    inv.cluster_of.push_back(std::move(of));
  }
  return inv;
}

// Strict order for a cluster: sub-cluster blocks at the next level that has
// any (each ordered recursively, blocks by smallest member), then the rest
// of the members by index.
std::vector<std::size_t> order_cluster(const Inventory& inv, const LayeredModel& lm,
                                       std::size_t li,
                                       const std::vector<std::size_t>& members) {
  for (std::size_t lj = li + 1; lj < inv.levels.size(); ++lj) {
    std::vector<const std::vector<std::size_t>*> subs;
    for (const auto& c : inv.clusters[lj]) {
      const bool meets = std::any_of(c.begin(), c.end(), [&](std::size_t w) {
        return std::binary_search(members.begin(), members.end(), w);
      });
      if (!meets) continue;
      for (std::size_t w : c)
        if (!std::binary_search(members.begin(), members.end(), w))
          throw LayeredError("strict clusters are not nested: " + lm.worlds[w] +
                             " is in a level " + lm.chain->label(inv.levels[lj]) +
                             " cluster but outside the enclosing level " +
                             lm.chain->label(inv.levels[li]) + " cluster");
      subs.push_back(&c);
    }
    if (subs.empty()) continue;
    std::vector<std::size_t> order;
    std::vector<bool> used(lm.worlds.size(), false);
    for (const auto* c : subs) {
      for (std::size_t w : order_cluster(inv, lm, lj, *c)) {
        order.push_back(w);
        used[w] = true;
      }
    }
    for (std::size_t w : members)
      if (!used[w]) order.push_back(w);
    return order;
  }
  return members;
}

}  // namespace

std::pair<LayeredModel, BulldozeReport> bulldoze(const LayeredModel& lm,
                                                 std::size_t copies) {
  if (copies < 1) throw LayeredError("bulldozing needs at least one copy per world");
  validate(lm);
  const Chain& chain = *lm.chain;
  const std::size_t n = lm.worlds.size();
  const Inventory inv = take_inventory(lm);

  BulldozeReport report;
  report.copies = copies;
  // position of each world inside the order of its cluster, per level
  std::vector<std::vector<std::size_t>> rank(inv.levels.size(),
                                             std::vector<std::size_t>(n, 0));
  std::vector<std::vector<std::size_t>> first_id(inv.levels.size());
  for (std::size_t li = 0; li < inv.levels.size(); ++li) {
    for (const auto& c : inv.clusters[li]) {
      ClusterInfo info;
      info.level = inv.levels[li];
      info.members = c;
      info.order = order_cluster(inv, lm, li, c);
      for (std::size_t k = 0; k < info.order.size(); ++k) rank[li][info.order[k]] = k;
      for (std::size_t lo = li; lo-- > 0;) {
        const int p = inv.cluster_of[lo][c.front()];
        if (p >= 0) {
          info.parent = first_id[lo][static_cast<std::size_t>(p)];
          break;
        }
      }
      first_id[li].push_back(report.clusters.size());
      report.clusters.push_back(std::move(info));
    }
  }

  std::vector<bool> clustered(n, false);
  for (const auto& of : inv.cluster_of)
    for (std::size_t w = 0; w < n; ++w) clustered[w] = clustered[w] || of[w] >= 0;

  LayeredModel out;
  out.chain = lm.chain;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t k = clustered[v] ? copies : 1;
    for (std::size_t i = 0; i < k; ++i) {
      report.origin.emplace_back(v, i);
      out.worlds.push_back(clustered[v] ? lm.worlds[v] + "#" + std::to_string(i)
                                        : lm.worlds[v]);
    }
  }
  const std::size_t t = out.worlds.size();
  for (const auto& [name, vals] : lm.valuation) {
    auto& nv = out.valuation[name];
    for (const auto& [src, idx] : report.origin) nv.push_back(vals[src]);
  }

  out.weak[chain.bottom()] = CrispRelation::universal(t);
  for (std::size_t li = 0; li < inv.levels.size(); ++li) {
    const Element b = inv.levels[li];
    const CrispRelation& q = lm.strict.at(b);
    CrispRelation s(t);
    for (std::size_t x = 0; x < t; ++x) {
      const auto [v, nx] = report.origin[x];
      for (std::size_t y = 0; y < t; ++y) {
        const auto [w, my] = report.origin[y];
        const int cv = inv.cluster_of[li][v];
        const int cw = inv.cluster_of[li][w];
        bool edge;
        if (cv < 0 || cw < 0 || cv != cw)
          edge = q(v, w);
        else
          edge = nx < my || (nx == my && rank[li][v] < rank[li][w]);
        if (edge) s.set(x, y);
      }
    }
    CrispRelation weak = s;
    for (std::size_t x = 0; x < t; ++x) weak.set(x, x);
    out.strict[b] = std::move(s);
    out.weak[b] = std::move(weak);
  }
  return {std::move(out), std::move(report)};
}

Model to_preference_model(const LayeredModel& lm) {
  validate(lm);
  const std::size_t n = lm.worlds.size();
  const Chain& chain = *lm.chain;
  if (lm.weak.at(chain.bottom()) != CrispRelation::universal(n))
    throw ModelError(ModelError::Kind::Precondition,
                     "level 0 must be universal; restrict to a level-0 class first");
  if (auto bad = check_strict_part_condition(lm))
    throw ModelError(ModelError::Kind::Precondition,
                     "strict layer " + chain.label(bad->level) +
                         " is not the strict part of its weak layer at " +
                         pair_text(lm, bad->v, bad->w));
  FuzzyRelation p = reconstruct_from_cuts(lm.weak, chain, CutFamily::Nested);
  return Model::preference(lm.chain, lm.worlds, std::move(p), lm.valuation);
}

LayeredModel restrict_to_level0_class(const LayeredModel& lm, std::size_t v) {
  const Chain& chain = *lm.chain;
  const CrispRelation& q0 = layer(lm.weak, chain.bottom(), chain, "weak");
  if (!is_reflexive(q0) || !is_symmetric(q0) || !is_transitive(q0))
    throw ModelError(ModelError::Kind::NotAnEquivalence,
                     "level 0 relation is not an equivalence");
  if (v >= lm.worlds.size())
    throw ModelError(ModelError::Kind::UnknownWorld, "world index out of range");
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < lm.worlds.size(); ++u)
    if (q0(v, u)) keep.push_back(u);
  auto restrict = [&](const CrispRelation& r) {
    CrispRelation s(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t j = 0; j < keep.size(); ++j)
        if (r(keep[i], keep[j])) s.set(i, j);
    return s;
  };
  LayeredModel out;
  out.chain = lm.chain;
  for (std::size_t u : keep) out.worlds.push_back(lm.worlds[u]);
  for (const auto& [b, r] : lm.weak) out.weak[b] = restrict(r);
  for (const auto& [b, r] : lm.strict) out.strict[b] = restrict(r);
  for (const auto& [name, vals] : lm.valuation)
    for (std::size_t u : keep) out.valuation[name].push_back(vals[u]);
  return out;
}

std::vector<Element> eval_all(const LayeredModel& lm, const Formula& f) {
  const Chain& chain = *lm.chain;
  const std::size_t n = lm.worlds.size();
  FuzzyRelation p = reconstruct_from_cuts(lm.weak, chain, CutFamily::Arbitrary);
  FuzzyRelation ps = lm.strict.empty()
                         ? FuzzyRelation(n, chain.bottom())
                         : reconstruct_from_cuts(lm.strict, chain, CutFamily::Arbitrary);
  std::unordered_map<const Node*, std::vector<Element>> memo;
  std::function<const std::vector<Element>&(const Formula&)> ev =
      [&](const Formula& g) -> const std::vector<Element>& {
    if (auto it = memo.find(g.get()); it != memo.end()) return it->second;
    std::vector<Element> r(n);
    const Op op = g.op();
    const auto modal = [&](auto reach, bool meet) {
      const auto& x = ev(g->kids[0]);
      for (std::size_t v = 0; v < n; ++v) {
        Element acc = meet ? chain.top() : chain.bottom();
        for (std::size_t w = 0; w < n; ++w) {
          if (!reach(v, w)) continue;
          acc = meet ? chain.meet(acc, x[w]) : chain.join(acc, x[w]);
        }
        r[v] = acc;
      }
    };
    const auto graded = [&](const FuzzyRelation& rel, bool box_like) {
      const auto& x = ev(g->kids[0]);
      for (std::size_t v = 0; v < n; ++v) {
        Element acc = box_like ? chain.top() : chain.bottom();
        for (std::size_t w = 0; w < n; ++w)
          acc = box_like ? chain.meet(acc, chain.residuum(rel(v, w), x[w]))
                         : chain.join(acc, chain.mono(rel(v, w), x[w]));
        r[v] = acc;
      }
    };
    switch (op) {
      case Op::Var: {
        auto it = lm.valuation.find(g->name);
        if (it == lm.valuation.end())
          throw ModelError(ModelError::Kind::UnboundVariable,
                           "variable '" + g->name + "' has no value in the model");
        r = it->second;
        break;
      }
      case Op::Const:
        std::fill(r.begin(), r.end(), g->element);
        break;
      case Op::And: case Op::Or: case Op::Prod: case Op::Implies: {
        const auto& x = ev(g->kids[0]);
        const auto& y = ev(g->kids[1]);
        for (std::size_t v = 0; v < n; ++v)
          r[v] = op == Op::And ? chain.meet(x[v], y[v])
               : op == Op::Or  ? chain.join(x[v], y[v])
               : op == Op::Prod ? chain.mono(x[v], y[v])
                                : chain.residuum(x[v], y[v]);
        break;
      }
      case Op::Neg: case Op::Delta: {
        const auto& x = ev(g->kids[0]);
        for (std::size_t v = 0; v < n; ++v)
          r[v] = op == Op::Neg ? chain.neg(x[v]) : chain.delta(x[v]);
        break;
      }
      case Op::BoxCut: case Op::DiaCut: {
        const auto& q = layer(lm.weak, g->element, chain, "weak");
        modal([&](std::size_t v, std::size_t w) { return q(v, w); }, op == Op::BoxCut);
        break;
      }
      case Op::SBoxCut: case Op::SDiaCut: {
        const auto& q = layer(lm.strict, g->element, chain, "strict");
        modal([&](std::size_t v, std::size_t w) { return q(v, w); }, op == Op::SBoxCut);
        break;
      }
      case Op::Box: graded(p, true); break;
      case Op::Dia: graded(p, false); break;
      case Op::SBox: graded(ps, true); break;
      case Op::SDia: graded(ps, false); break;
      case Op::Univ: case Op::Exist:
        modal([](std::size_t, std::size_t) { return true; }, op == Op::Univ);
        break;
    }
    return memo.emplace(g.get(), std::move(r)).first->second;
  };
  return ev(f);
}

std::string describe(const BulldozeReport& report, const LayeredModel& source) {
  const Chain& chain = *source.chain;
  std::ostringstream os;
  os << "copies " << report.copies << "\n";
  for (std::size_t i = 0; i < report.clusters.size(); ++i) {
    const auto& c = report.clusters[i];
    os << "cluster " << i << " level " << chain.label(c.level) << " members";
    for (std::size_t w : c.members) os << ' ' << source.worlds[w];
    os << " parent ";
    if (c.parent) os << *c.parent; else os << '-';
    os << " order";
    for (std::size_t k = 0; k < c.order.size(); ++k)
      os << (k ? " < " : " ") << source.worlds[c.order[k]];
    os << "\n";
  }
  for (std::size_t x = 0; x < report.origin.size(); ++x)
    os << "world " << x << " from " << source.worlds[report.origin[x].first]
       << " index " << report.origin[x].second << "\n";
  return os.str();
}

}  // namespace mvpref
