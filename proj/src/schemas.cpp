#include <functional>
#include <stdexcept>

#include "mvpref/proof.hpp"

namespace mvpref {

namespace {

ParamExpr prm(std::string a) { return {ParamExpr::Kind::Param, std::move(a), {}}; }
ParamExpr meet(std::string a, std::string b) {
  return {ParamExpr::Kind::Meet, std::move(a), std::move(b)};
}
ParamExpr coatom() { return {ParamExpr::Kind::Coatom, {}, {}}; }
ParamExpr topx() { return {ParamExpr::Kind::Top, {}, {}}; }
ParamExpr botx() { return {ParamExpr::Kind::Bottom, {}, {}}; }

Pattern mv(std::string name) {
  Pattern p;
  p.op = Op::Var;
  p.meta = std::move(name);
  return p;
}
Pattern konst(ParamExpr e) {
  Pattern p;
  p.op = Op::Const;
  p.param = std::move(e);
  return p;
}
Pattern un(Op op, Pattern a) {
  Pattern p;
  p.op = op;
  p.kids = {std::move(a)};
  return p;
}
Pattern cut(Op op, ParamExpr level, Pattern a) {
  Pattern p = un(op, std::move(a));
  p.param = std::move(level);
  return p;
}
Pattern bin(Op op, Pattern a, Pattern b) {
  Pattern p;
  p.op = op;
  p.kids = {std::move(a), std::move(b)};
  return p;
}
Pattern imp_(Pattern a, Pattern b) { return bin(Op::Implies, std::move(a), std::move(b)); }
Pattern iff_(const Pattern& a, const Pattern& b) {
  return bin(Op::Prod, imp_(a, b), imp_(b, a));
}

Schema schema(std::string id, Pattern pat, std::map<std::string, bool> params,
              std::vector<std::string> metas,
              std::vector<std::pair<std::string, std::string>> order = {}) {
  return Schema{std::move(id), std::move(pat), std::move(params), std::move(order),
                std::move(metas)};
}

// The CM-style block for one box: Top, MD, Ax, C, K.
void modal_block(std::vector<Schema>& out, const std::string& suffix,
                 const std::function<Pattern(Pattern)>& bx,
                 const std::map<std::string, bool>& level) {
  const Pattern phi = mv("phi"), psi = mv("psi");
  auto with = [&](std::map<std::string, bool> extra) {
    extra.insert(level.begin(), level.end());
    return extra;
  };
  out.push_back(schema("Top" + suffix, bx(konst(topx())), with({}), {}));
  out.push_back(schema("MD" + suffix,
                       imp_(bin(Op::And, bx(phi), bx(psi)), bx(bin(Op::And, phi, psi))),
                       with({}), {"phi", "psi"}));
  const Pattern c = konst(prm("c"));
  out.push_back(schema("Ax" + suffix, iff_(bx(imp_(c, phi)), imp_(c, bx(phi))),
                       with({{"c", false}}), {"phi"}));
  const Pattern k = konst(coatom());
  out.push_back(schema("C" + suffix,
                       imp_(bx(bin(Op::Or, k, phi)), bin(Op::Or, k, bx(phi))), with({}),
                       {"phi"}));
  out.push_back(schema("K" + suffix, imp_(bx(imp_(phi, psi)), imp_(bx(phi), bx(psi))),
                       with({}), {"phi", "psi"}));
}

void cut_block(std::vector<Schema>& out, Op box_op, Op dia_op, bool positive,
               bool strict) {
  const std::string s = strict ? "<" : "_b";
  const Pattern phi = mv("phi");
  modal_block(out, s, [&](Pattern x) { return cut(box_op, prm("b"), std::move(x)); },
              {{"b", positive}});
  const std::string t = strict ? "<" : "";
  out.push_back(schema("Nest" + t,
                       imp_(cut(box_op, prm("a"), phi), cut(box_op, prm("b"), phi)),
                       {{"a", positive}, {"b", positive}}, {"phi"}, {{"a", "b"}}));
  out.push_back(schema(
      "4" + t,
      imp_(cut(box_op, meet("a", "b"), phi),
           cut(box_op, prm("a"), cut(box_op, prm("b"), phi))),
      {{"a", positive}, {"b", positive}}, {"phi"}));
  if (!positive) {
    out.push_back(schema("T", imp_(cut(box_op, prm("a"), phi), phi), {{"a", false}},
                         {"phi"}));
    out.push_back(schema("B0",
                         imp_(phi, cut(box_op, botx(), cut(dia_op, botx(), phi))), {},
                         {"phi"}));
  }
}

void interaction_block(std::vector<Schema>& out) {
  const Pattern phi = mv("phi"), psi = mv("psi");
  const Pattern sb = cut(Op::SBoxCut, prm("b"), phi);
  out.push_back(schema("Incl", imp_(cut(Op::BoxCut, prm("b"), phi), sb), {{"b", true}},
                       {"phi"}));
  out.push_back(schema("I1", imp_(sb, cut(Op::BoxCut, prm("a"), sb)),
                       {{"a", true}, {"b", true}}, {"phi"}, {{"b", "a"}}));
  out.push_back(schema("I2",
                       imp_(sb, cut(Op::SBoxCut, prm("b"), cut(Op::BoxCut, prm("a"), phi))),
                       {{"a", true}, {"b", true}}, {"phi"}, {{"b", "a"}}));
  const Pattern a = konst(prm("a"));
  out.push_back(schema(
      "I3",
      imp_(bin(Op::And, sb, imp_(psi, a)),
           cut(Op::BoxCut, prm("b"),
               bin(Op::Or, phi, imp_(cut(Op::BoxCut, prm("b"), psi), a)))),
      {{"a", false}, {"b", true}}, {"phi", "psi"}));
}

void delta_block(std::vector<Schema>& out) {
  const Pattern phi = mv("phi");
  out.push_back(schema("DeltaBox",
                       imp_(un(Op::Delta, cut(Op::BoxCut, prm("b"), phi)),
                            cut(Op::BoxCut, prm("b"), un(Op::Delta, phi))),
                       {{"b", false}}, {"phi"}));
  out.push_back(schema("DeltaSBox",
                       imp_(un(Op::Delta, cut(Op::SBoxCut, prm("b"), phi)),
                            cut(Op::SBoxCut, prm("b"), un(Op::Delta, phi))),
                       {{"b", true}}, {"phi"}));
}

std::string param_text(const ParamExpr& e) {
  switch (e.kind) {
    case ParamExpr::Kind::Param: return e.a;
    case ParamExpr::Kind::Meet: return e.a + "^" + e.b;
    case ParamExpr::Kind::Coatom: return "k";
    case ParamExpr::Kind::Top: return "1";
    case ParamExpr::Kind::Bottom: return "0";
  }
  return "?";
}

std::string pattern_text(const Pattern& p) {
  auto wrap = [](const Pattern& k) {
    const std::string s = pattern_text(k);
    return is_binary(k.op) ? "(" + s + ")" : s;
  };
  if (p.op == Op::Var) return p.meta;
  if (p.op == Op::Const) return "#" + param_text(p.param);
  if (is_binary(p.op))
    return wrap(p.kids[0]) + " " + std::string(op_symbol(p.op)) + " " + wrap(p.kids[1]);
  std::string head(op_symbol(p.op));
  if (is_cut_modal(p.op)) head += "(" + param_text(p.param) + ")";
  return head + (p.op == Op::Neg ? "" : " ") + wrap(p.kids[0]);
}

Element eval_param(const ParamExpr& e, const std::map<std::string, Element>& params,
                   const Chain& chain) {
  switch (e.kind) {
    case ParamExpr::Kind::Param: return params.at(e.a);
    case ParamExpr::Kind::Meet: return chain.meet(params.at(e.a), params.at(e.b));
    case ParamExpr::Kind::Coatom: return chain.coatom();
    case ParamExpr::Kind::Top: return chain.top();
    case ParamExpr::Kind::Bottom: return chain.bottom();
  }
  throw std::logic_error("unknown parameter expression");
}

struct Unifier {
  Match m;
  std::vector<std::pair<ParamExpr, Element>> deferred;

  bool param(const ParamExpr& e, Element x) {
    if (e.kind != ParamExpr::Kind::Param) {
      deferred.emplace_back(e, x);
      return true;
    }
    auto [it, fresh] = m.params.emplace(e.a, x);
    return fresh || it->second == x;
  }

  bool run(const Formula& f, const Pattern& p) {
    if (p.op == Op::Var) {
      auto [it, fresh] = m.metas.emplace(p.meta, f);
      return fresh || it->second == f;
    }
    if (f.op() != p.op) return false;
    if (p.op == Op::Const) return param(p.param, f->element);
    if (is_cut_modal(p.op) && !param(p.param, f->element)) return false;
    if (f->kids.size() != p.kids.size()) return false;
    for (std::size_t i = 0; i < p.kids.size(); ++i)
      if (!run(f->kids[i], p.kids[i])) return false;
    return true;
  }
};

}  // namespace

std::string_view system_name(SystemId s) {
  switch (s) {
    case SystemId::M: return "M";
    case SystemId::CM: return "CM";
    case SystemId::mM: return "mM";
    case SystemId::mMMinusPlus: return "mM_minus_plus";
    case SystemId::P: return "P";
    case SystemId::PDelta: return "P_delta";
  }
  return "?";
}

SystemId system_from_name(std::string_view name) {
  if (name == "M") return SystemId::M;
  if (name == "CM") return SystemId::CM;
  if (name == "mM") return SystemId::mM;
  if (name == "mM_minus_plus" || name == "mM-+" || name == "mM-") return SystemId::mMMinusPlus;
  if (name == "P") return SystemId::P;
  if (name == "P_delta" || name == "PDelta" || name == "P-delta") return SystemId::PDelta;
  throw std::invalid_argument("unknown axiom system '" + std::string(name) +
                              "' (expected M, CM, mM, mM_minus_plus, P, P_delta)");
}

std::string describe(const Schema& s) {
  std::string out = s.id + ": " + pattern_text(s.pattern);
  std::vector<std::string> side;
  for (const auto& [name, positive] : s.params)
    side.push_back(name + (positive ? " in B+" : " in B"));
  for (const auto& [lo, hi] : s.order) side.push_back(lo + " <= " + hi);
  if (!side.empty()) {
    out += "   [";
    for (std::size_t i = 0; i < side.size(); ++i) out += (i ? ", " : "") + side[i];
    out += "]";
  }
  return out;
}

SystemRules schema_catalog(SystemId s, const Chain& chain) {
  (void)chain;  // parameters range over the chain at match time
  SystemRules r;
  r.language = {Op::Var, Op::Const, Op::And, Op::Or, Op::Prod, Op::Implies, Op::Neg};
  switch (s) {
    case SystemId::M:
    case SystemId::CM: {
      r.language.insert({Op::Box, Op::Dia});
      modal_block(r.schemas, "", [](Pattern x) { return un(Op::Box, std::move(x)); }, {});
      if (s == SystemId::M) {
        std::erase_if(r.schemas, [](const Schema& x) { return x.id == "C" || x.id == "K"; });
      } else {
        r.nec.insert(Family::Fuzzy);
      }
      r.mon.insert(Family::Fuzzy);
      break;
    }
    case SystemId::mM:
    case SystemId::mMMinusPlus: {
      const bool positive = s == SystemId::mMMinusPlus;
      r.language.insert({Op::BoxCut, Op::DiaCut});
      r.positive_levels_only = positive;
      cut_block(r.schemas, Op::BoxCut, Op::DiaCut, positive, false);
      r.nec.insert(Family::Cut);
      r.mon.insert(Family::Cut);
      break;
    }
    case SystemId::P:
    case SystemId::PDelta: {
      r.language.insert({Op::BoxCut, Op::DiaCut, Op::SBoxCut, Op::SDiaCut});
      cut_block(r.schemas, Op::BoxCut, Op::DiaCut, false, false);
      cut_block(r.schemas, Op::SBoxCut, Op::SDiaCut, true, true);
      interaction_block(r.schemas);
      r.nec = {Family::Cut, Family::Strict};
      r.mon = {Family::Cut, Family::Strict};
      if (s == SystemId::PDelta) {
        delta_block(r.schemas);
        r.language.insert({Op::Delta, Op::Box, Op::Dia, Op::SBox, Op::SDia, Op::Univ,
                           Op::Exist});
      }
      break;
    }
  }
  return r;
}

const Schema* find_schema(const SystemRules& rules, std::string_view id) {
  for (const auto& s : rules.schemas)
    if (s.id == id) return &s;
  return nullptr;
}

MatchResult match_schema(const Formula& f, const Schema& s, const Chain& chain) {
  MatchResult res;
  Unifier u;
  if (!u.run(f, s.pattern)) {
    res.detail = "formula does not have the shape " + pattern_text(s.pattern);
    return res;
  }
  for (const auto& [e, x] : u.deferred) {
    if (eval_param(e, u.m.params, chain) != x) {
      res.detail = "level " + chain.label(x) + " should be " + param_text(e) + " = " +
                   chain.label(eval_param(e, u.m.params, chain));
      return res;
    }
  }
  res.failure = MatchFailure::SideCondition;
  for (const auto& [name, positive] : s.params) {
    auto it = u.m.params.find(name);
    if (it == u.m.params.end()) continue;
    if (!chain.contains(it->second)) {
      res.detail = name + " is not an element of the chain";
      return res;
    }
    if (positive && it->second == chain.bottom()) {
      res.detail = name + " must be positive, got " + chain.label(it->second);
      return res;
    }
  }
  for (const auto& [lo, hi] : s.order) {
    const Element a = u.m.params.at(lo), b = u.m.params.at(hi);
    if (!(a <= b)) {
      res.detail = lo + " <= " + hi + " fails: " + lo + "=" + chain.label(a) + ", " + hi +
                   "=" + chain.label(b);
      return res;
    }
  }
  res.match = std::move(u.m);
  return res;
}

namespace {

Formula build(const Pattern& p, const Match& m, const Chain& chain) {
  if (p.op == Op::Var) return m.metas.at(p.meta);
  if (p.op == Op::Const) return cnst(chain, eval_param(p.param, m.params, chain));
  if (is_cut_modal(p.op))
    return make_cut(p.op, chain, eval_param(p.param, m.params, chain),
                    build(p.kids[0], m, chain));
  std::vector<Formula> kids;
  for (const auto& k : p.kids) kids.push_back(build(k, m, chain));
  return make(p.op, std::move(kids));
}

}  // namespace

Formula instantiate(const Schema& s, const Match& m, const Chain& chain) {
  return build(s.pattern, m, chain);
}

}  // namespace mvpref
