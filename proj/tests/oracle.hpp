// Independent reference computations for the test suites. Nothing here calls
// the kernel, the search engine or the relation helpers under test; the only
// shared piece is the product table of the chain.
#ifndef MVPREF_TESTS_ORACLE_HPP_
#define MVPREF_TESTS_ORACLE_HPP_

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/kernel.hpp"
#include "mvpref/lattice.hpp"
#include "mvpref/model.hpp"

namespace oracle {

using mvpref::Chain;
using mvpref::Element;
using mvpref::Formula;
using mvpref::FuzzyRelation;
using mvpref::Model;
using mvpref::Op;

inline Element el(std::size_t i) { return Element{static_cast<std::uint16_t>(i)}; }

/// max{z : x * z <= y}, by scanning.
inline Element residuum(const Chain& c, Element x, Element y) {
  Element best = c.bottom();
  for (Element z : c.elements())
    if (c.mono(x, z) <= y) best = z;
  return best;
}

/// Numeric value of a Lukasiewicz label, in units of 1/(n-1).
inline long luk_units(Element x) { return x.index; }

/// Lukasiewicz product and residuum from the closed formulas.
inline Element luk_mono(const Chain& c, Element x, Element y) {
  const long top = static_cast<long>(c.size()) - 1;
  return el(static_cast<std::size_t>(std::max(0L, luk_units(x) + luk_units(y) - top)));
}
inline Element luk_residuum(const Chain& c, Element x, Element y) {
  const long top = static_cast<long>(c.size()) - 1;
  return el(static_cast<std::size_t>(std::min(top, top - luk_units(x) + luk_units(y))));
}

inline bool strict_pair(const FuzzyRelation& p, std::size_t v, std::size_t w, Element b,
                        mvpref::StrictCuts mode) {
  if (mode == mvpref::StrictCuts::CutThenStrict) return p(v, w) >= b && p(w, v) < b;
  return p(v, w) >= b && p(v, w) > p(w, v);
}

/// Direct recursive evaluation from the semantic clauses.
inline Element eval(const Model& m, std::size_t v, const Formula& f,
                    mvpref::StrictCuts mode = mvpref::StrictCuts::CutThenStrict) {
  const Chain& c = m.chain();
  const FuzzyRelation& p = m.relation();
  const std::size_t n = m.size();
  auto sub = [&](std::size_t w, std::size_t k = 0) { return eval(m, w, f->kids[k], mode); };
  Element acc;
  switch (f->op) {
    case Op::Var: return m.valuation().at(f->name).at(v);
    case Op::Const: return f->element;
    case Op::And: return std::min(sub(v, 0), sub(v, 1));
    case Op::Or: return std::max(sub(v, 0), sub(v, 1));
    case Op::Prod: return c.mono(sub(v, 0), sub(v, 1));
    case Op::Implies: return residuum(c, sub(v, 0), sub(v, 1));
    case Op::Neg: return residuum(c, sub(v), c.bottom());
    case Op::Delta: return sub(v) == c.top() ? c.top() : c.bottom();
    case Op::Box:
      acc = c.top();
      for (std::size_t w = 0; w < n; ++w) acc = std::min(acc, residuum(c, p(v, w), sub(w)));
      return acc;
    case Op::Dia:
      acc = c.bottom();
      for (std::size_t w = 0; w < n; ++w) acc = std::max(acc, c.mono(p(v, w), sub(w)));
      return acc;
    case Op::SBox:
    case Op::SDia: {
      const bool box = f->op == Op::SBox;
      acc = box ? c.top() : c.bottom();
      for (std::size_t w = 0; w < n; ++w) {
        const Element s = p(v, w) > p(w, v) ? p(v, w) : c.bottom();
        acc = box ? std::min(acc, residuum(c, s, sub(w))) : std::max(acc, c.mono(s, sub(w)));
      }
      return acc;
    }
    case Op::BoxCut:
    case Op::DiaCut:
    case Op::SBoxCut:
    case Op::SDiaCut: {
      const bool box = f->op == Op::BoxCut || f->op == Op::SBoxCut;
      const bool strict = f->op == Op::SBoxCut || f->op == Op::SDiaCut;
      acc = box ? c.top() : c.bottom();
      for (std::size_t w = 0; w < n; ++w) {
        const bool in = strict ? strict_pair(p, v, w, f->element, mode) : p(v, w) >= f->element;
        if (!in) continue;
        acc = box ? std::min(acc, sub(w)) : std::max(acc, sub(w));
      }
      return acc;
    }
    case Op::Univ:
      acc = c.top();
      for (std::size_t w = 0; w < n; ++w) acc = std::min(acc, sub(w));
      return acc;
    case Op::Exist:
      acc = c.bottom();
      for (std::size_t w = 0; w < n; ++w) acc = std::max(acc, sub(w));
      return acc;
  }
  std::abort();
}

inline std::vector<Element> eval_all(const Model& m, const Formula& f,
                                     mvpref::StrictCuts mode = mvpref::StrictCuts::CutThenStrict) {
  std::vector<Element> out;
  for (std::size_t v = 0; v < m.size(); ++v) out.push_back(eval(m, v, f, mode));
  return out;
}

inline bool is_preorder(const FuzzyRelation& p, const Chain& c) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) {
    if (p(u, u) != c.top()) return false;
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (std::min(p(u, v), p(v, w)) > p(u, w)) return false;
  }
  return true;
}

/// Naive fixpoint closure, used only to build random test preorders.
inline FuzzyRelation close(FuzzyRelation p, const Chain& c) {
  const std::size_t n = p.size();
  for (std::size_t u = 0; u < n; ++u) p(u, u) = c.top();
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w) {
          const Element x = std::min(p(u, v), p(v, w));
          if (x > p(u, w)) {
            p(u, w) = x;
            changed = true;
          }
        }
  }
  return p;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }

  Element element(const Chain& c) { return el(below(c.size())); }
  Element positive(const Chain& c) { return el(1 + below(c.size() - 1)); }

  FuzzyRelation relation(const Chain& c, std::size_t n) {
    FuzzyRelation r(n, c.bottom());
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v) r(u, v) = element(c);
    return r;
  }
  FuzzyRelation preorder(const Chain& c, std::size_t n) { return close(relation(c, n), c); }

  mvpref::Valuation valuation(const Chain& c, std::size_t n, const std::vector<std::string>& vars) {
    mvpref::Valuation val;
    for (const auto& x : vars)
      for (std::size_t w = 0; w < n; ++w) val[x].push_back(element(c));
    return val;
  }

  /// Random formula over vars. strict = false keeps to the operators a
  /// general model accepts.
  Formula formula(const Chain& c, const std::vector<std::string>& vars, std::size_t depth,
                  bool strict = true) {
    if (depth == 0 || below(4) == 0) {
      if (below(5) == 0) return mvpref::cnst(c, element(c));
      return mvpref::var(vars[below(vars.size())]);
    }
    static const Op binary[] = {Op::And, Op::Or, Op::Prod, Op::Implies};
    static const Op unary[] = {Op::Neg,  Op::Delta, Op::Box,   Op::Dia,  Op::SBox,   Op::SDia,
                               Op::Univ, Op::Exist, Op::BoxCut, Op::DiaCut, Op::SBoxCut, Op::SDiaCut};
    if (below(2) == 0) {
      const Op op = binary[below(4)];
      return mvpref::make(op, {formula(c, vars, depth - 1, strict), formula(c, vars, depth - 1, strict)});
    }
    Op op;
    do op = unary[below(12)];
    while (!strict && mvpref::is_strict_modal(op));
    Formula kid = formula(c, vars, depth - 1, strict);
    if (mvpref::is_cut_modal(op)) {
      const bool strict_cut = op == Op::SBoxCut || op == Op::SDiaCut;
      return mvpref::make_cut(op, c, strict_cut ? positive(c) : element(c), kid);
    }
    return mvpref::make(op, {kid});
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle

#endif  // MVPREF_TESTS_ORACLE_HPP_
