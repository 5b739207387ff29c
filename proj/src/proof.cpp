#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

#include "mvpref/proof.hpp"

namespace mvpref {

namespace {

// Propositional skeleton: variables and maximal modal subformulas are atoms.
struct Skeleton {
  std::vector<std::string> atom_names;
  std::map<std::string, std::size_t> index;

  std::size_t atom(const std::string& key) {
    auto [it, fresh] = index.emplace(key, atom_names.size());
    if (fresh) atom_names.push_back(key);
    return it->second;
  }

  void collect(const Formula& f) {
    if (f.op() == Op::Var) {
      atom(f->name);
    } else if (is_modal(f.op())) {
      atom("[" + print(f) + "]");
    } else {
      for (const auto& k : f->kids) collect(k);
    }
  }

  Element eval(const Formula& f, const std::vector<Element>& a, const Chain& c) const {
    switch (f.op()) {
      case Op::Var: return a[index.at(f->name)];
      case Op::Const: return f->element;
      case Op::And: return c.meet(eval(f->kids[0], a, c), eval(f->kids[1], a, c));
      case Op::Or: return c.join(eval(f->kids[0], a, c), eval(f->kids[1], a, c));
      case Op::Prod: return c.mono(eval(f->kids[0], a, c), eval(f->kids[1], a, c));
      case Op::Implies: return c.residuum(eval(f->kids[0], a, c), eval(f->kids[1], a, c));
      case Op::Neg: return c.neg(eval(f->kids[0], a, c));
      case Op::Delta: return c.delta(eval(f->kids[0], a, c));
      default: return a[index.at("[" + print(f) + "]")];
    }
  }
};

constexpr double kTautologyLimit = 2e7;

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream is{std::string(s)};
  for (std::string t; is >> t;) out.push_back(t);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::optional<std::size_t> to_index(const std::string& s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

Justification parse_justification(const std::string& text) {
  const auto t = split_ws(text);
  if (t.empty()) throw std::invalid_argument("missing justification");
  Justification j;
  auto num = [&](std::size_t k) {
    if (k >= t.size()) throw std::invalid_argument("'" + t[0] + "' needs a line number");
    auto v = to_index(t[k]);
    if (!v) throw std::invalid_argument("'" + t[k] + "' is not a line number");
    return *v;
  };
  auto arity = [&](std::size_t n) {
    if (t.size() != n) throw std::invalid_argument("malformed '" + t[0] + "' justification");
  };
  if (t[0] == "premise") {
    arity(2);
    j.kind = Justification::Kind::Premise;
    j.i = num(1);
  } else if (t[0] == "taut") {
    arity(1);
    j.kind = Justification::Kind::Taut;
  } else if (t[0] == "mp") {
    arity(3);
    j.kind = Justification::Kind::MP;
    j.i = num(1);
    j.j = num(2);
  } else if (t[0] == "mon") {
    arity(2);
    j.kind = Justification::Kind::Mon;
    j.i = num(1);
  } else if (t[0] == "nec") {
    j.kind = Justification::Kind::Nec;
    if (t.size() == 2) {
      j.i = num(1);
    } else {
      arity(3);
      j.level = t[1];
      j.i = num(2);
    }
  } else if (t[0] == "ax") {
    if (t.size() < 2) throw std::invalid_argument("'ax' needs a schema id");
    j.kind = Justification::Kind::Axiom;
    j.schema = t[1];
    for (std::size_t k = 2; k < t.size(); ++k) {
      const auto eq = t[k].find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == t[k].size())
        throw std::invalid_argument("axiom parameter '" + t[k] + "' is not name=label");
      j.params[t[k].substr(0, eq)] = t[k].substr(eq + 1);
    }
  } else {
    throw std::invalid_argument("unknown justification '" + t[0] + "'");
  }
  return j;
}

std::optional<Family> box_family(Op op) {
  switch (op) {
    case Op::Box: return Family::Fuzzy;
    case Op::BoxCut: return Family::Cut;
    case Op::SBoxCut: return Family::Strict;
    default: return std::nullopt;
  }
}

// First operator outside the system's language, as a message.
std::optional<std::string> language_violation(const Formula& f, const SystemRules& rules,
                                              const Chain& chain) {
  if (!rules.language.count(f.op()))
    return "operator '" + std::string(op_symbol(f.op())) + "' is not in the language";
  if (rules.positive_levels_only && is_cut_modal(f.op()) && f->element == chain.bottom())
    return "level 0 modalities are not in the language";
  for (const auto& k : f->kids)
    if (auto v = language_violation(k, rules, chain)) return v;
  return std::nullopt;
}

bool same_box(const Formula& a, const Formula& b) {
  return a.op() == b.op() && (!is_cut_modal(a.op()) || a->element == b->element);
}

}  // namespace

std::optional<std::string> refute_tautology(const Formula& f, const Chain& chain) {
  Skeleton sk;
  sk.collect(f);
  const std::size_t n = sk.atom_names.size();
  double total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= static_cast<double>(chain.size());
  if (total > kTautologyLimit)
    throw std::invalid_argument("tautology check needs " + std::to_string(n) +
                                " atoms, too many for exhaustive assignment");
  std::vector<Element> a(n, chain.bottom());
  while (true) {
    const Element v = sk.eval(f, a, chain);
    if (v != chain.top()) {
      std::string out;
      for (std::size_t i = 0; i < n; ++i)
        out += (i ? ", " : "") + sk.atom_names[i] + "=" + chain.label(a[i]);
      return (out.empty() ? "" : out + " ") + "gives " + chain.label(v);
    }
    std::size_t i = 0;
    while (i < n && a[i] == chain.top()) a[i++] = chain.bottom();
    if (i == n) return std::nullopt;
    ++a[i].index;
  }
}

Proof parse_proof(std::string_view text) {
  Proof p;
  std::istringstream is{std::string(text)};
  std::size_t src = 0;
  for (std::string raw; std::getline(is, raw);) {
    ++src;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '%') continue;
    if (line.rfind("assume", 0) == 0 && (line.size() == 6 || line[6] == ' ' || line[6] == '\t')) {
      const std::string f = trim(std::string_view(line).substr(6));
      if (f.empty()) throw std::runtime_error("line " + std::to_string(src) + ": empty premise");
      p.premises.push_back(f);
      continue;
    }
    const auto dot = line.find('.');
    const auto semi = line.find(';');
    auto number = dot == std::string::npos ? std::nullopt : to_index(line.substr(0, dot));
    if (!number || semi == std::string::npos || semi < dot)
      throw std::runtime_error("line " + std::to_string(src) +
                               ": expected 'n. formula ; justification'");
    ProofLine pl;
    pl.number = *number;
    pl.source_line = src;
    pl.formula_text = trim(std::string_view(line).substr(dot + 1, semi - dot - 1));
    pl.justification_text = trim(std::string_view(line).substr(semi + 1));
    p.lines.push_back(std::move(pl));
  }
  return p;
}

std::string_view reason_name(CheckResult::Reason r) {
  using R = CheckResult::Reason;
  switch (r) {
    case R::None: return "none";
    case R::Syntax: return "syntax";
    case R::BadReference: return "bad reference";
    case R::UnknownSchema: return "unknown schema";
    case R::NoMatch: return "no match";
    case R::SideCondition: return "side condition";
    case R::ParamMismatch: return "parameter mismatch";
    case R::RuleMismatch: return "rule mismatch";
    case R::NotATheorem: return "rule applied to a non-theorem";
    case R::TautologyRefuted: return "tautology refuted";
    case R::Language: return "outside the language";
  }
  return "?";
}

CheckResult check_proof(const Proof& proof, SystemId system, const Chain& chain) {
  using R = CheckResult::Reason;
  const SystemRules rules = schema_catalog(system, chain);
  CheckResult res;
  auto reject = [&](std::size_t line, R reason, std::string msg) {
    res.accepted = false;
    res.line = line;
    res.reason = reason;
    res.message = std::move(msg);
    res.theorems.clear();
    return res;
  };

  std::vector<Formula> premises;
  for (const auto& text : proof.premises) {
    try {
      premises.push_back(parse(text, chain));
    } catch (const ParseError& e) {
      return reject(0, R::Syntax, "premise '" + text + "': " + e.what());
    }
  }
  if (proof.lines.empty()) return reject(0, R::Syntax, "proof has no lines");

  std::vector<Formula> formulas;
  std::vector<bool> uses_premise;

  for (std::size_t k = 0; k < proof.lines.size(); ++k) {
    const ProofLine& pl = proof.lines[k];
    const std::size_t no = pl.number;
    if (no != k + 1)
      return reject(no, R::BadReference,
                    "line numbered " + std::to_string(no) + " should be " + std::to_string(k + 1));
    Formula f;
    try {
      f = parse(pl.formula_text, chain);
    } catch (const ParseError& e) {
      return reject(no, R::Syntax, e.what());
    }
    if (auto v = language_violation(f, rules, chain))
      return reject(no, R::Language, *v + " of " + std::string(system_name(system)));
    Justification j;
    try {
      j = parse_justification(pl.justification_text);
    } catch (const std::invalid_argument& e) {
      return reject(no, R::Syntax, e.what());
    }
    auto ref = [&](std::size_t i) -> std::optional<std::size_t> {
      if (i < 1 || i >= no) return std::nullopt;
      return i - 1;
    };
    bool from_premise = false;

    switch (j.kind) {
      case Justification::Kind::Premise: {
        if (j.i < 1 || j.i > premises.size())
          return reject(no, R::BadReference, "there is no premise " + std::to_string(j.i));
        if (!(premises[j.i - 1] == f))
          return reject(no, R::RuleMismatch, "formula differs from premise " + std::to_string(j.i));
        from_premise = true;
        break;
      }
      case Justification::Kind::Axiom: {
        const Schema* s = find_schema(rules, j.schema);
        if (!s)
          return reject(no, R::UnknownSchema, "no schema '" + j.schema + "' in " +
                                                  std::string(system_name(system)));
        MatchResult m = match_schema(f, *s, chain);
        if (!m.match)
          return reject(no, m.failure == MatchFailure::NoMatch ? R::NoMatch : R::SideCondition,
                        j.schema + ": " + m.detail);
        for (const auto& [name, label] : j.params) {
          auto it = m.match->params.find(name);
          if (it == m.match->params.end())
            return reject(no, R::ParamMismatch, j.schema + " has no parameter " + name);
          auto e = chain.find(label);
          if (!e || *e != it->second)
            return reject(no, R::ParamMismatch,
                          name + "=" + label + " but the instance has " + name + "=" +
                              chain.label(it->second));
        }
        break;
      }
      case Justification::Kind::Taut: {
        std::optional<std::string> refuted;
        try {
          refuted = refute_tautology(f, chain);
        } catch (const std::invalid_argument& e) {
          return reject(no, R::TautologyRefuted, e.what());
        }
        if (refuted) return reject(no, R::TautologyRefuted, "not a tautology: " + *refuted);
        break;
      }
      case Justification::Kind::MP: {
        auto a = ref(j.i), b = ref(j.j);
        if (!a || !b) return reject(no, R::BadReference, "mp cites a line that is not earlier");
        const Formula& g = formulas[*b];
        if (g.op() != Op::Implies || !(g->kids[0] == formulas[*a]) || !(g->kids[1] == f))
          return reject(no, R::RuleMismatch,
                        "line " + std::to_string(j.j) + " is not line " + std::to_string(j.i) +
                            " -> this formula");
        from_premise = uses_premise[*a] || uses_premise[*b];
        break;
      }
      case Justification::Kind::Nec: {
        auto a = ref(j.i);
        if (!a) return reject(no, R::BadReference, "nec cites a line that is not earlier");
        auto fam = box_family(f.op());
        if (!fam || !rules.nec.count(*fam))
          return reject(no, R::RuleMismatch, "necessitation does not apply to this operator");
        if (j.level) {
          auto e = chain.find(*j.level);
          if (!e || *fam == Family::Fuzzy || *e != f->element)
            return reject(no, R::RuleMismatch, "necessitation level " + *j.level +
                                                   " does not match the formula");
        }
        if (!(f->kids[0] == formulas[*a]))
          return reject(no, R::RuleMismatch,
                        "formula is not a box of line " + std::to_string(j.i));
        if (uses_premise[*a])
          return reject(no, R::NotATheorem,
                        "line " + std::to_string(j.i) + " depends on a premise");
        break;
      }
      case Justification::Kind::Mon: {
        auto a = ref(j.i);
        if (!a) return reject(no, R::BadReference, "mon cites a line that is not earlier");
        const bool shape = f.op() == Op::Implies && same_box(f->kids[0], f->kids[1]);
        auto fam = shape ? box_family(f->kids[0].op()) : std::nullopt;
        if (!fam || !rules.mon.count(*fam))
          return reject(no, R::RuleMismatch, "formula is not box phi -> box psi");
        const Formula& g = formulas[*a];
        if (g.op() != Op::Implies || !(g->kids[0] == f->kids[0]->kids[0]) ||
            !(g->kids[1] == f->kids[1]->kids[0]))
          return reject(no, R::RuleMismatch,
                        "line " + std::to_string(j.i) + " is not phi -> psi");
        if (uses_premise[*a])
          return reject(no, R::NotATheorem,
                        "line " + std::to_string(j.i) + " depends on a premise");
        break;
      }
    }
    formulas.push_back(f);
    uses_premise.push_back(from_premise);
  }

  res.accepted = true;
  for (std::size_t k = 0; k < formulas.size(); ++k)
    if (!uses_premise[k]) res.theorems.push_back(formulas[k]);
  return res;
}

}  // namespace mvpref
