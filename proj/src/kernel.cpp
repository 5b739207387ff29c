#include "mvpref/kernel.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace mvpref {

namespace {

using Key = std::tuple<int, std::uint32_t, std::uint32_t, std::uint16_t>;

struct Compiler {
  std::vector<Instr>& code;
  const std::vector<std::string>& vars;
  std::map<Key, std::uint32_t> seen;
  std::map<const Node*, std::uint32_t> by_node;

  std::uint32_t emit(const Formula& f) {
    if (auto it = by_node.find(f.get()); it != by_node.end()) return it->second;
    Instr ins{f.op(), 0, 0, {}};
    if (f.op() == Op::Var) {
      auto it = std::find(vars.begin(), vars.end(), f->name);
      if (it == vars.end())
        throw std::invalid_argument("variable '" + f->name +
                                    "' is not in the variable list");
      ins.a = static_cast<std::uint32_t>(it - vars.begin());
    } else if (f.op() == Op::Const) {
      ins.e = f->element;
    } else {
      ins.a = emit(f->kids[0]);
      if (f->kids.size() > 1) ins.b = emit(f->kids[1]);
      if (is_cut_modal(f.op())) ins.e = f->element;
    }
    const Key key{static_cast<int>(ins.op), ins.a, ins.b, ins.e.index};
    auto [it, fresh] =
        seen.emplace(key, static_cast<std::uint32_t>(code.size()));
    if (fresh) code.push_back(ins);
    by_node.emplace(f.get(), it->second);
    return it->second;
  }
};

}  // namespace

Program::Program(const std::vector<Formula>& roots,
                 std::vector<std::string> vars)
    : vars_(std::move(vars)) {
  Compiler c{code_, vars_, {}, {}};
  for (const auto& r : roots) roots_.push_back(c.emit(r));
  for (const auto& ins : code_)
    uses_strict_ = uses_strict_ || is_strict_modal(ins.op);
}

void evaluate(const Program& program, const Chain& chain, std::size_t n,
              std::span<const Element> rel, std::span<const Element> valuation,
              std::vector<Element>& out, StrictCuts strict) {
  const auto& code = program.code();
  out.resize(code.size() * n);
  const Element top = chain.top();
  const Element bot = chain.bottom();
  auto R = [&](std::size_t v, std::size_t w) { return rel[v * n + w]; };
  // Strict accessibility at level b.
  auto strict_at = [&](std::size_t v, std::size_t w, Element b) {
    const Element vw = R(v, w), wv = R(w, v);
    if (vw < b) return false;
    return strict == StrictCuts::CutThenStrict ? wv < b : vw > wv;
  };
  for (std::size_t s = 0; s < code.size(); ++s) {
    const Instr& ins = code[s];
    Element* dst = out.data() + s * n;
    const Element* x = out.data() + static_cast<std::size_t>(ins.a) * n;
    const Element* y = out.data() + static_cast<std::size_t>(ins.b) * n;
    switch (ins.op) {
      case Op::Var:
        for (std::size_t v = 0; v < n; ++v) dst[v] = valuation[ins.a * n + v];
        break;
      case Op::Const:
        std::fill(dst, dst + n, ins.e);
        break;
      case Op::And:
        for (std::size_t v = 0; v < n; ++v) dst[v] = std::min(x[v], y[v]);
        break;
      case Op::Or:
        for (std::size_t v = 0; v < n; ++v) dst[v] = std::max(x[v], y[v]);
        break;
      case Op::Prod:
        for (std::size_t v = 0; v < n; ++v) dst[v] = chain.mono(x[v], y[v]);
        break;
      case Op::Implies:
        for (std::size_t v = 0; v < n; ++v) dst[v] = chain.residuum(x[v], y[v]);
        break;
      case Op::Neg:
        for (std::size_t v = 0; v < n; ++v) dst[v] = chain.neg(x[v]);
        break;
      case Op::Delta:
        for (std::size_t v = 0; v < n; ++v) dst[v] = chain.delta(x[v]);
        break;
      case Op::Box:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = top;
          for (std::size_t w = 0; w < n; ++w)
            acc = std::min(acc, chain.residuum(R(v, w), x[w]));
          dst[v] = acc;
        }
        break;
      case Op::Dia:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = bot;
          for (std::size_t w = 0; w < n; ++w)
            acc = std::max(acc, chain.mono(R(v, w), x[w]));
          dst[v] = acc;
        }
        break;
      case Op::SBox:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = top;
          for (std::size_t w = 0; w < n; ++w) {
            const Element p = R(v, w) > R(w, v) ? R(v, w) : bot;
            acc = std::min(acc, chain.residuum(p, x[w]));
          }
          dst[v] = acc;
        }
        break;
      case Op::SDia:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = bot;
          for (std::size_t w = 0; w < n; ++w) {
            const Element p = R(v, w) > R(w, v) ? R(v, w) : bot;
            acc = std::max(acc, chain.mono(p, x[w]));
          }
          dst[v] = acc;
        }
        break;
      case Op::BoxCut:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = top;
          for (std::size_t w = 0; w < n; ++w)
            if (R(v, w) >= ins.e) acc = std::min(acc, x[w]);
          dst[v] = acc;
        }
        break;
      case Op::DiaCut:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = bot;
          for (std::size_t w = 0; w < n; ++w)
            if (R(v, w) >= ins.e) acc = std::max(acc, x[w]);
          dst[v] = acc;
        }
        break;
      case Op::SBoxCut:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = top;
          for (std::size_t w = 0; w < n; ++w)
            if (strict_at(v, w, ins.e)) acc = std::min(acc, x[w]);
          dst[v] = acc;
        }
        break;
      case Op::SDiaCut:
        for (std::size_t v = 0; v < n; ++v) {
          Element acc = bot;
          for (std::size_t w = 0; w < n; ++w)
            if (strict_at(v, w, ins.e)) acc = std::max(acc, x[w]);
          dst[v] = acc;
        }
        break;
      case Op::Univ: {
        Element acc = top;
        for (std::size_t w = 0; w < n; ++w) acc = std::min(acc, x[w]);
        std::fill(dst, dst + n, acc);
        break;
      }
      case Op::Exist: {
        Element acc = bot;
        for (std::size_t w = 0; w < n; ++w) acc = std::max(acc, x[w]);
        std::fill(dst, dst + n, acc);
        break;
      }
    }
  }
}

}  // namespace mvpref
