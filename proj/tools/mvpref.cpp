// mvpref: command-line front end for models, search, bulldozing and proofs.
//
// Exit codes: 0 success / valid / accepted, 1 countermodel / rejected /
// mismatch, 2 input errors.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mvpref/document.hpp"
#include "mvpref/examples.hpp"
#include "mvpref/layered.hpp"
#include "mvpref/prefs.hpp"
#include "mvpref/proof.hpp"
#include "mvpref/search.hpp"

using namespace mvpref;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BoundsFlags {
  std::string chain = "lukasiewicz:3";
  std::size_t max_worlds = 3;
  std::size_t min_worlds = 1;
  std::string vars = "p,q";
  std::size_t samples = 0;
  std::uint64_t seed = 1;
  std::string frames = "preference";
  std::string strict_cuts = "cut-then-strict";
  double budget = 1e8;
  bool no_exhaustive = false;
  bool serial = false;

  void attach(CLI::App* app) {
    app->add_option("--chain", chain, "lukasiewicz:N or godel:N")->capture_default_str();
    app->add_option("--max-worlds", max_worlds)->capture_default_str();
    app->add_option("--min-worlds", min_worlds)->capture_default_str();
    app->add_option("--vars", vars, "comma separated variable names")->capture_default_str();
    app->add_option("--samples", samples, "random models after the exhaustive sweep")
        ->capture_default_str();
    app->add_option("--seed", seed)->capture_default_str();
    app->add_option("--frames", frames, "preference, general or crisp")->capture_default_str();
    app->add_option("--strict-cuts", strict_cuts, "cut-then-strict or strict-then-cut")
        ->capture_default_str();
    app->add_option("--budget", budget, "largest exhaustive model count")->capture_default_str();
    app->add_flag("--no-exhaustive", no_exhaustive, "random sampling only");
    app->add_flag("--serial", serial, "disable the parallel sweep");
  }
};

StrictCuts strict_cuts_from(const std::string& s) {
  if (s == "cut-then-strict") return StrictCuts::CutThenStrict;
  if (s == "strict-then-cut") return StrictCuts::StrictThenCut;
  throw InputError("--strict-cuts must be cut-then-strict or strict-then-cut");
}

SearchBounds make_bounds(const BoundsFlags& f) {
  SearchBounds b;
  b.chain = std::make_shared<const Chain>(chain_from_spec(f.chain));
  b.max_worlds = f.max_worlds;
  b.min_worlds = f.min_worlds;
  b.variables.clear();
  std::stringstream ss(f.vars);
  for (std::string v; std::getline(ss, v, ',');)
    if (!v.empty()) b.variables.push_back(v);
  b.random_samples = f.samples;
  b.seed = f.seed;
  b.enumerate_exhaustively = !f.no_exhaustive;
  if (f.frames == "preference")
    b.frames = FrameClass::Preference;
  else if (f.frames == "general")
    b.frames = FrameClass::General;
  else if (f.frames == "crisp")
    b.frames = FrameClass::Crisp;
  else
    throw InputError("--frames must be preference, general or crisp");
  b.strict_cuts = strict_cuts_from(f.strict_cuts);
  b.budget = f.budget;
  b.execution = f.serial ? Execution::Serial : Execution::Parallel;
  return b;
}

Formula parse_or_throw(const std::string& text, const Chain& chain) {
  try {
    return parse(text, chain);
  } catch (const ParseError& e) {
    throw InputError("formula '" + text + "' " + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_matrix(std::ostream& os, const std::vector<std::string>& worlds,
                  const std::function<std::string(std::size_t, std::size_t)>& cell) {
  std::size_t w = 1;
  for (const auto& n : worlds) w = std::max(w, n.size());
  for (std::size_t u = 0; u < worlds.size(); ++u)
    for (std::size_t v = 0; v < worlds.size(); ++v) w = std::max(w, cell(u, v).size());
  auto pad = [&](const std::string& s) { return s + std::string(w + 1 - s.size(), ' '); };
  os << pad("");
  for (const auto& n : worlds) os << pad(n);
  os << '\n';
  for (std::size_t u = 0; u < worlds.size(); ++u) {
    os << pad(worlds[u]);
    for (std::size_t v = 0; v < worlds.size(); ++v) os << pad(cell(u, v));
    os << '\n';
  }
}

int report_verdict(const Verdict& v, const std::string& countermodel_path) {
  if (v.valid()) {
    std::cout << "valid-within-bounds (" << v.models_checked << " models checked)\n";
    return 0;
  }
  const auto& cm = *v.countermodel;
  std::cout << "countermodel-found at world " << cm.model.worlds()[cm.world] << "\n";
  const auto j = model_to_json(cm.model, cm.world);
  if (!countermodel_path.empty()) {
    write_json_file(countermodel_path, j);
    std::cout << "countermodel written to " << countermodel_path << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded modal preference logic over finite MTL-chains"};
  app.require_subcommand(1);

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a formula on a model file");
  std::string eval_model, eval_formula, eval_world, eval_strict;
  eval_cmd->add_option("model", eval_model)->required();
  eval_cmd->add_option("formula", eval_formula)->required();
  eval_cmd->add_option("--world", eval_world, "print only this world's value");
  eval_cmd->add_option("--strict-cuts", eval_strict, "override the model's strict cut reading");

  // validate
  auto* val_cmd = app.add_subcommand("validate", "check a model file, optionally repairing it");
  std::string val_model, val_out;
  bool repair_closure = false, repair_reflexive = false;
  val_cmd->add_option("model", val_model)->required();
  val_cmd->add_flag("--repair-closure", repair_closure, "replace P by its meet-transitive closure");
  val_cmd->add_flag("--repair-reflexive", repair_reflexive, "set the diagonal to top");
  val_cmd->add_option("-o,--output", val_out, "write the repaired model here");

  // cuts
  auto* cuts_cmd = app.add_subcommand("cuts", "crisp cuts of the preference relation at a level");
  std::string cuts_model, cuts_level;
  cuts_cmd->add_option("model", cuts_model)->required();
  cuts_cmd->add_option("level", cuts_level)->required();

  // validity / consequence
  auto* valid_cmd = app.add_subcommand("validity", "bounded validity of a formula");
  std::string valid_formula, valid_out;
  BoundsFlags valid_bounds;
  valid_cmd->add_option("formula", valid_formula)->required();
  valid_cmd->add_option("--countermodel", valid_out, "write the countermodel file here");
  valid_bounds.attach(valid_cmd);

  auto* cons_cmd = app.add_subcommand("consequence", "bounded local consequence");
  std::vector<std::string> cons_premises;
  std::string cons_formula, cons_out;
  BoundsFlags cons_bounds;
  cons_cmd->add_option("--premise", cons_premises, "premise formula (repeatable)");
  cons_cmd->add_option("formula", cons_formula)->required();
  cons_cmd->add_option("--countermodel", cons_out, "write the countermodel file here");
  cons_bounds.attach(cons_cmd);

  // bulldoze
  auto* bull_cmd = app.add_subcommand("bulldoze", "unfold strict clusters of a layered model");
  std::string bull_in, bull_out;
  std::size_t bull_k = 2;
  bull_cmd->add_option("model", bull_in, "layered model file (a plain model is layered first)")
      ->required();
  bull_cmd->add_option("copies", bull_k, "copies per cluster member")->required();
  bull_cmd->add_option("-o,--output", bull_out, "write the bulldozed layered model here");

  // proof
  auto* proof_cmd = app.add_subcommand("proof", "check a proof file");
  std::string proof_file, proof_system = "P", proof_chain = "lukasiewicz:3";
  proof_cmd->add_option("file", proof_file)->required();
  proof_cmd->add_option("--system", proof_system, "M, CM, mM, mM_minus_plus, P, P_delta")
      ->capture_default_str();
  proof_cmd->add_option("--chain", proof_chain)->capture_default_str();

  // axioms
  auto* ax_cmd = app.add_subcommand("axioms", "soundness suite of a system's schemas");
  std::string ax_system = "mM";
  std::vector<std::string> ax_drop;
  bool ax_list = false;
  BoundsFlags ax_bounds;
  ax_cmd->add_option("--system", ax_system)->capture_default_str();
  ax_cmd->add_option("--drop-order", ax_drop, "ignore the order side condition of a schema");
  ax_cmd->add_flag("--list", ax_list, "print the schema catalog only");
  ax_bounds.attach(ax_cmd);

  // examples
  auto* ex_cmd = app.add_subcommand("examples", "recompute the bundled examples against the golden tables");

  // pref
  auto* pref_cmd = app.add_subcommand("pref", "value of a preference ordering between formulas");
  std::string pref_model, pref_kind, pref_phi, pref_psi, pref_context;
  bool pref_strict = false;
  pref_cmd->add_option("kind", pref_kind, "ee or ae")->required();
  pref_cmd->add_option("phi", pref_phi)->required();
  pref_cmd->add_option("psi", pref_psi)->required();
  pref_cmd->add_option("--model", pref_model)->required();
  pref_cmd->add_flag("--strict", pref_strict);
  pref_cmd->add_option("--context", pref_context);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*eval_cmd) {
      const auto j = read_json_file(eval_model);
      std::vector<std::string> worlds;
      std::vector<Element> values;
      const Chain* chain = nullptr;
      LayeredModel lm;
      std::optional<Model> model;
      if (is_layered_document(j)) {
        lm = read_layered_document(j);
        chain = lm.chain.get();
        worlds = lm.worlds;
        values = eval_all(lm, parse_or_throw(eval_formula, *chain));
      } else {
        auto doc = read_model_document(j);
        if (!eval_strict.empty()) doc.strict_cuts = strict_cuts_from(eval_strict);
        model = to_model(doc);
        chain = &model->chain();
        worlds = model->worlds();
        values = eval_all(*model, parse_or_throw(eval_formula, *chain));
      }
      if (!eval_world.empty()) {
        auto it = std::find(worlds.begin(), worlds.end(), eval_world);
        if (it == worlds.end()) throw InputError("unknown world '" + eval_world + "'");
        std::cout << chain->label(values[static_cast<std::size_t>(it - worlds.begin())]) << "\n";
      } else {
        for (std::size_t w = 0; w < worlds.size(); ++w)
          std::cout << worlds[w] << "\t" << chain->label(values[w]) << "\n";
      }
      return 0;
    }

    if (*val_cmd) {
      const auto j = read_json_file(val_model);
      if (is_layered_document(j)) {
        const LayeredModel lm = read_layered_document(j);
        try {
          validate(lm);
        } catch (const LayeredError& e) {
          std::cout << "invalid: " << e.what() << "\n";
          return 1;
        }
        std::size_t clusters = 0;
        for (Element b : lm.chain->positives()) clusters += find_clusters(lm, b).size();
        std::cout << "valid layered model: " << lm.worlds.size() << " worlds over "
                  << lm.chain->describe() << ", " << clusters << " strict clusters\n";
        if (auto w = strict_nesting_violation(lm))
          std::cout << "note: strict layers are not nested (" << lm.worlds[w->v] << ", "
                    << lm.worlds[w->w] << ") at " << lm.chain->label(w->level) << " but not at "
                    << lm.chain->label(w->lower) << "\n";
        return 0;
      }
      auto doc = read_model_document(j);
      const Chain& chain = *doc.chain;
      if (repair_reflexive)
        for (std::size_t u = 0; u < doc.worlds.size(); ++u) doc.relation(u, u) = chain.top();
      if (repair_closure) doc.relation = meet_transitive_closure(doc.relation);
      if (doc.general) {
        std::cout << "general model: no preorder conditions apply\n";
        return 0;
      }
      if (auto why = preorder_violation(doc.relation, chain, doc.worlds)) {
        std::cout << "invalid: relation is " << *why << "\n";
        return 1;
      }
      const Model m = to_model(doc);
      std::cout << "valid preference model: " << m.size() << " worlds over "
                << chain.describe() << "\n";
      if (!val_out.empty()) {
        write_json_file(val_out, model_to_json(m, doc.witness_world));
        std::cout << "written to " << val_out << "\n";
      }
      return 0;
    }

    if (*cuts_cmd) {
      const Model m = load_model(cuts_model);
      const Chain& chain = m.chain();
      auto level = chain.find(cuts_level);
      if (!level) throw InputError("unknown level '" + cuts_level + "'");
      const auto q = cut(m.relation(), *level);
      std::cout << "Q_" << cuts_level << "\n";
      print_matrix(std::cout, m.worlds(), [&](auto u, auto v) { return q(u, v) ? "1" : "0"; });
      if (*level == chain.bottom()) {
        std::cout << "strict cuts are not defined at the bottom level\n";
        return 0;
      }
      const auto a = strict_of_cut(m.relation(), chain, *level);
      const auto b = cut_of_strict(m.relation(), chain, *level);
      std::cout << "(P_b)^< (cut then strict)\n";
      print_matrix(std::cout, m.worlds(), [&](auto u, auto v) { return a(u, v) ? "1" : "0"; });
      std::cout << "(P^<)_b (strict then cut)\n";
      print_matrix(std::cout, m.worlds(), [&](auto u, auto v) { return b(u, v) ? "1" : "0"; });
      return 0;
    }

    if (*valid_cmd) {
      const SearchBounds b = make_bounds(valid_bounds);
      return report_verdict(is_valid_bounded(parse_or_throw(valid_formula, *b.chain), b),
                            valid_out);
    }

    if (*cons_cmd) {
      const SearchBounds b = make_bounds(cons_bounds);
      std::vector<Formula> prem;
      for (const auto& p : cons_premises) prem.push_back(parse_or_throw(p, *b.chain));
      return report_verdict(
          consequence_bounded(prem, parse_or_throw(cons_formula, *b.chain), b), cons_out);
    }

    if (*bull_cmd) {
      const auto j = read_json_file(bull_in);
      const LayeredModel src = is_layered_document(j)
                                   ? read_layered_document(j)
                                   : derive_layered(to_model(read_model_document(j)));
      auto [out, report] = bulldoze(src, bull_k);
      std::cout << describe(report, src);
      if (!bull_out.empty()) {
        write_json_file(bull_out, layered_to_json(out));
        std::cout << "written to " << bull_out << "\n";
      }
      return 0;
    }

    if (*proof_cmd) {
      const Chain chain = chain_from_spec(proof_chain);
      Proof p;
      try {
        p = parse_proof(read_file(proof_file));
      } catch (const std::runtime_error& e) {
        throw InputError(proof_file + ": " + e.what());
      }
      const auto res = check_proof(p, system_from_name(proof_system), chain);
      if (res.accepted) {
        std::cout << "accepted in " << proof_system << ": " << p.lines.size() << " lines, "
                  << res.theorems.size() << " premise-free\n";
        return 0;
      }
      std::cout << "rejected at line " << res.line << " (" << reason_name(res.reason)
                << "): " << res.message << "\n";
      return 1;
    }

    if (*ax_cmd) {
      const SystemId sys = system_from_name(ax_system);
      SearchBounds b = make_bounds(ax_bounds);
      if (ax_list) {
        for (const auto& s : schema_catalog(sys, *b.chain).schemas)
          std::cout << describe(s) << "\n";
        return 0;
      }
      SuiteOptions opt;
      opt.drop_order_conditions.insert(ax_drop.begin(), ax_drop.end());
      const auto entries = axiom_soundness_suite(sys, b, opt);
      std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
      std::size_t failures = 0;
      for (const auto& e : entries) {
        auto& t = tally[e.schema];
        ++t.first;
        if (!e.verdict.valid()) {
          ++t.second;
          ++failures;
          std::cout << "countermodel: " << e.schema << ": " << print(e.instance) << "\n";
        }
      }
      for (const auto& [id, t] : tally)
        std::cout << id << "\t" << t.first << " instances\t" << t.second << " refuted\n";
      std::cout << entries.size() << " instances, " << failures << " refuted\n";
      return failures ? 1 : 0;
    }

    if (*ex_cmd) {
      std::size_t bad = 0;
      for (const auto& c : reproduce_examples()) {
        if (c.matches()) {
          std::cout << "ok       " << c.key << " = " << c.computed << "\n";
        } else {
          ++bad;
          std::cout << "MISMATCH " << c.key << ": golden " << c.expected << ", computed "
                    << c.computed << "\n";
        }
      }
      std::cout << bad << " mismatches\n";
      return bad ? 1 : 0;
    }

    if (*pref_cmd) {
      const Model m = load_model(pref_model);
      PrefKind k;
      k.quantifier = pref_quantifier(pref_kind);
      k.strict = pref_strict;
      if (!pref_context.empty()) k.context = parse_or_throw(pref_context, m.chain());
      const Element v = eval_pref(m, k, parse_or_throw(pref_phi, m.chain()),
                                  parse_or_throw(pref_psi, m.chain()));
      std::cout << m.chain().label(v) << "\n";
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
