#include <functional>

#include "mvpref/formula.hpp"

namespace mvpref {

namespace {

using Rewrite = std::function<Formula(const Formula& f, Formula kid)>;

// Bottom-up rewrite: children first, then `rule` on the rebuilt node. The
// rule returns an empty Formula to keep the node.
Formula rewrite(const Formula& f, const Rewrite& rule) {
  if (f->kids.empty()) return f;
  std::vector<Formula> kids;
  for (const auto& k : f->kids) kids.push_back(rewrite(k, rule));
  if (kids.size() == 1) {
    if (Formula r = rule(f, kids[0])) return r;
  }
  auto n = std::make_shared<Node>(*f);
  n->kids = std::move(kids);
  return Formula(std::move(n));
}

// Big meet over a of (M(phi -> #a) -> #a) where M is the dual modality.
Formula dual_meet(const Chain& chain, const Formula& phi,
                  const std::function<Formula(Formula)>& dual) {
  std::vector<Formula> parts;
  for (Element a : chain.elements())
    parts.push_back(imp(dual(imp(phi, cnst(chain, a))), cnst(chain, a)));
  return conj_all(chain, parts);
}

}  // namespace

Formula desugar_dia_from_box(const Formula& f, const Chain& chain) {
  return rewrite(f, [&](const Formula& node, Formula phi) -> Formula {
    const Element lvl = node->element;
    switch (node.op()) {
      case Op::Dia:
        return dual_meet(chain, phi, [](Formula g) { return box(g); });
      case Op::SDia:
        return dual_meet(chain, phi, [](Formula g) { return sbox(g); });
      case Op::Exist:
        return dual_meet(chain, phi, [](Formula g) { return univ(g); });
      case Op::DiaCut:
        return dual_meet(chain, phi,
                         [&](Formula g) { return box(chain, lvl, g); });
      case Op::SDiaCut:
        return dual_meet(chain, phi,
                         [&](Formula g) { return sbox(chain, lvl, g); });
      default:
        return {};
    }
  });
}

Formula desugar_box_from_dia(const Formula& f, const Chain& chain) {
  return rewrite(f, [&](const Formula& node, Formula phi) -> Formula {
    const Element lvl = node->element;
    switch (node.op()) {
      case Op::Box:
        return dual_meet(chain, phi, [](Formula g) { return dia(g); });
      case Op::SBox:
        return dual_meet(chain, phi, [](Formula g) { return sdia(g); });
      case Op::Univ:
        return dual_meet(chain, phi, [](Formula g) { return exist(g); });
      case Op::BoxCut:
        return dual_meet(chain, phi,
                         [&](Formula g) { return dia(chain, lvl, g); });
      case Op::SBoxCut:
        return dual_meet(chain, phi,
                         [&](Formula g) { return sdia(chain, lvl, g); });
      default:
        return {};
    }
  });
}

Formula desugar_graded_from_cuts(const Formula& f, const Chain& chain) {
  return rewrite(f, [&](const Formula& node, Formula phi) -> Formula {
    std::vector<Formula> parts;
    switch (node.op()) {
      case Op::Box:
        for (Element b : chain.elements())
          parts.push_back(imp(cnst(chain, b), box(chain, b, phi)));
        return conj_all(chain, parts);
      case Op::Dia:
        for (Element b : chain.elements())
          parts.push_back(prod(cnst(chain, b), dia(chain, b, phi)));
        return disj_all(chain, parts);
      case Op::SBox:
        for (Element b : chain.positives())
          parts.push_back(imp(cnst(chain, b), sbox(chain, b, phi)));
        return conj_all(chain, parts);
      case Op::SDia:
        for (Element b : chain.positives())
          parts.push_back(prod(cnst(chain, b), sdia(chain, b, phi)));
        return disj_all(chain, parts);
      case Op::Univ:
        return box(chain, chain.bottom(), phi);
      case Op::Exist:
        return dia(chain, chain.bottom(), phi);
      default:
        return {};
    }
  });
}

Formula desugar_cuts_via_delta(const Formula& f, const Chain& chain) {
  return rewrite(f, [&](const Formula& node, Formula phi) -> Formula {
    const Op op = node.op();
    if (op != Op::BoxCut && op != Op::SBoxCut) return {};
    const Element b = node->element;
    if (op == Op::BoxCut && b == chain.bottom()) return univ(phi);
    std::vector<Formula> parts;
    for (Element a : chain.elements()) {
      Formula reach = op == Op::BoxCut ? dia(approx(chain, phi, a))
                                       : sdia(approx(chain, phi, a));
      parts.push_back(
          imp(delta(imp(cnst(chain, b), reach)), cnst(chain, a)));
    }
    return conj_all(chain, parts);
  });
}

}  // namespace mvpref
