#include "mvpref/formula.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace mvpref {

bool is_binary(Op op) {
  return op == Op::And || op == Op::Or || op == Op::Prod || op == Op::Implies;
}

bool is_cut_modal(Op op) {
  return op == Op::BoxCut || op == Op::DiaCut || op == Op::SBoxCut ||
         op == Op::SDiaCut;
}

bool is_modal(Op op) {
  switch (op) {
    case Op::BoxCut: case Op::DiaCut: case Op::SBoxCut: case Op::SDiaCut:
    case Op::Box: case Op::Dia: case Op::SBox: case Op::SDia:
    case Op::Univ: case Op::Exist:
      return true;
    default:
      return false;
  }
}

bool is_strict_modal(Op op) {
  return op == Op::SBoxCut || op == Op::SDiaCut || op == Op::SBox ||
         op == Op::SDia;
}

std::string_view op_symbol(Op op) {
  switch (op) {
    case Op::Var: return "var";
    case Op::Const: return "#";
    case Op::And: return "&";
    case Op::Or: return "|";
    case Op::Prod: return "*";
    case Op::Implies: return "->";
    case Op::Neg: return "~";
    case Op::Delta: return "delta";
    case Op::BoxCut: case Op::Box: return "box";
    case Op::DiaCut: case Op::Dia: return "dia";
    case Op::SBoxCut: case Op::SBox: return "sbox";
    case Op::SDiaCut: case Op::SDia: return "sdia";
    case Op::Univ: return "A";
    case Op::Exist: return "E";
  }
  return "?";
}

Op Formula::op() const { return node_->op; }

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const Node& x = *a.node_;
  const Node& y = *b.node_;
  if (x.op != y.op || x.kids.size() != y.kids.size()) return false;
  if (x.op == Op::Var && x.name != y.name) return false;
  if ((x.op == Op::Const || is_cut_modal(x.op)) && x.element != y.element)
    return false;
  for (std::size_t i = 0; i < x.kids.size(); ++i)
    if (!(x.kids[i] == y.kids[i])) return false;
  return true;
}

namespace {

Formula node(Op op, std::vector<Formula> kids, Element e = {},
             std::string label = {}, std::string name = {}) {
  auto n = std::make_shared<Node>();
  n->op = op;
  n->kids = std::move(kids);
  n->element = e;
  n->label = std::move(label);
  n->name = std::move(name);
  return Formula(std::move(n));
}

}  // namespace

Formula var(std::string name) { return node(Op::Var, {}, {}, {}, std::move(name)); }
Formula cnst(const Chain& chain, Element value) {
  return node(Op::Const, {}, value, chain.label(value));
}
Formula conj(Formula a, Formula b) { return node(Op::And, {std::move(a), std::move(b)}); }
Formula disj(Formula a, Formula b) { return node(Op::Or, {std::move(a), std::move(b)}); }
Formula prod(Formula a, Formula b) { return node(Op::Prod, {std::move(a), std::move(b)}); }
Formula imp(Formula a, Formula b) { return node(Op::Implies, {std::move(a), std::move(b)}); }
Formula neg(Formula a) { return node(Op::Neg, {std::move(a)}); }
Formula delta(Formula a) { return node(Op::Delta, {std::move(a)}); }
Formula box(Formula a) { return node(Op::Box, {std::move(a)}); }
Formula dia(Formula a) { return node(Op::Dia, {std::move(a)}); }
Formula sbox(Formula a) { return node(Op::SBox, {std::move(a)}); }
Formula sdia(Formula a) { return node(Op::SDia, {std::move(a)}); }
Formula univ(Formula a) { return node(Op::Univ, {std::move(a)}); }
Formula exist(Formula a) { return node(Op::Exist, {std::move(a)}); }

Formula make_cut(Op op, const Chain& chain, Element level, Formula kid) {
  if (!is_cut_modal(op)) throw std::invalid_argument("not a cut modality");
  if (is_strict_modal(op) && level == chain.bottom())
    throw std::invalid_argument("strict cut modalities need a positive level");
  return node(op, {std::move(kid)}, level, chain.label(level));
}

Formula box(const Chain& c, Element l, Formula a) { return make_cut(Op::BoxCut, c, l, std::move(a)); }
Formula dia(const Chain& c, Element l, Formula a) { return make_cut(Op::DiaCut, c, l, std::move(a)); }
Formula sbox(const Chain& c, Element l, Formula a) { return make_cut(Op::SBoxCut, c, l, std::move(a)); }
Formula sdia(const Chain& c, Element l, Formula a) { return make_cut(Op::SDiaCut, c, l, std::move(a)); }

Formula make(Op op, std::vector<Formula> kids) {
  if (op == Op::Var || op == Op::Const || is_cut_modal(op))
    throw std::invalid_argument("make() cannot build leaves or cut modalities");
  const std::size_t arity = is_binary(op) ? 2 : 1;
  if (kids.size() != arity) throw std::invalid_argument("wrong arity");
  return node(op, std::move(kids));
}

Formula iff(Formula a, Formula b) { return prod(imp(a, b), imp(b, a)); }

Formula approx(const Chain& chain, Formula a, Element c) {
  return delta(iff(std::move(a), cnst(chain, c)));
}

Formula conj_all(const Chain& chain, const std::vector<Formula>& parts) {
  if (parts.empty()) return cnst(chain, chain.top());
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = conj(acc, parts[i]);
  return acc;
}

Formula disj_all(const Chain& chain, const std::vector<Formula>& parts) {
  if (parts.empty()) return cnst(chain, chain.bottom());
  Formula acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) acc = disj(acc, parts[i]);
  return acc;
}

namespace {

int precedence(Op op) {
  switch (op) {
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    case Op::Prod: return 4;
    case Op::Var: case Op::Const: return 6;
    default: return 5;
  }
}

void print_into(const Formula& f, std::string& out);

void print_child(const Formula& f, bool parens, std::string& out) {
  if (parens) out.push_back('(');
  print_into(f, out);
  if (parens) out.push_back(')');
}

void print_into(const Formula& f, std::string& out) {
  const Node& n = *f;
  switch (n.op) {
    case Op::Var:
      out += n.name;
      return;
    case Op::Const:
      out += '#';
      out += n.label;
      return;
    case Op::And: case Op::Or: case Op::Prod: case Op::Implies: {
      const int p = precedence(n.op);
      const int lp = precedence(n.kids[0].op());
      const int rp = precedence(n.kids[1].op());
      // -> associates to the right, the others to the left.
      const bool right_assoc = n.op == Op::Implies;
      print_child(n.kids[0], right_assoc ? lp <= p : lp < p, out);
      out += ' ';
      out += op_symbol(n.op);
      out += ' ';
      print_child(n.kids[1], right_assoc ? rp < p : rp <= p, out);
      return;
    }
    default:
      break;
  }
  const bool wrap = precedence(n.kids[0].op()) < 5;
  out += op_symbol(n.op);
  if (is_cut_modal(n.op)) {
    out += '(';
    out += n.label;
    out += ')';
  }
  if (n.op != Op::Neg) out += ' ';
  print_child(n.kids[0], wrap, out);
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

std::size_t modal_depth(const Formula& f) {
  std::size_t d = 0;
  for (const auto& k : f->kids) d = std::max(d, modal_depth(k));
  return d + (is_modal(f.op()) ? 1 : 0);
}

std::size_t size(const Formula& f) {
  std::size_t s = 1;
  for (const auto& k : f->kids) s += size(k);
  return s;
}

std::set<std::string> variables(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.op() == Op::Var) out.insert(g->name);
    for (const auto& k : g->kids) walk(k);
  };
  walk(f);
  return out;
}

bool contains_op(const Formula& f, Op op) {
  if (f.op() == op) return true;
  return std::any_of(f->kids.begin(), f->kids.end(),
                     [&](const Formula& k) { return contains_op(k, op); });
}

Formula substitute(const Formula& f,
                   const std::vector<std::pair<std::string, Formula>>& map) {
  if (f.op() == Op::Var) {
    for (const auto& [name, g] : map)
      if (name == f->name) return g;
    return f;
  }
  if (f->kids.empty()) return f;
  auto n = std::make_shared<Node>(*f);
  bool changed = false;
  for (auto& k : n->kids) {
    Formula s = substitute(k, map);
    changed = changed || s.get() != k.get();
    k = std::move(s);
  }
  return changed ? Formula(std::move(n)) : f;
}

}  // namespace mvpref
