#ifndef MVPREF_PROOF_HPP_
#define MVPREF_PROOF_HPP_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/lattice.hpp"
#include "mvpref/search.hpp"

namespace mvpref {

enum class SystemId { M, CM, mM, mMMinusPlus, P, PDelta };

std::string_view system_name(SystemId s);
/// Accepts "M", "CM", "mM", "mM-+", "mM_minus_plus", "P", "P_delta", ...
SystemId system_from_name(std::string_view name);

/// Which box the rules and schema families talk about.
enum class Family { Fuzzy, Cut, Strict };

/// Lattice parameter expression inside a schema.
struct ParamExpr {
  enum class Kind { Param, Meet, Coatom, Top, Bottom };
  Kind kind = Kind::Param;
  std::string a;  // parameter name (Param, Meet)
  std::string b;  // second parameter (Meet)
};

/// Schema pattern tree. Op::Var nodes are metavariables; Const and cut
/// nodes carry a parameter expression instead of an element.
struct Pattern {
  Op op = Op::Var;
  std::string meta;
  ParamExpr param;
  std::vector<Pattern> kids;
};

struct Schema {
  std::string id;
  Pattern pattern;
  /// Parameter name -> true when it ranges over B+ only.
  std::map<std::string, bool> params;
  /// Order side conditions lo <= hi.
  std::vector<std::pair<std::string, std::string>> order;
  std::vector<std::string> metas;
};

std::string describe(const Schema& s);

struct SystemRules {
  std::vector<Schema> schemas;
  std::set<Family> nec;  // families allowed for necessitation
  std::set<Family> mon;  // families allowed for monotonicity
  bool positive_levels_only = false;  // cut levels must be in B+
  std::set<Op> language;
};

SystemRules schema_catalog(SystemId s, const Chain& chain);
const Schema* find_schema(const SystemRules& rules, std::string_view id);

struct Match {
  std::map<std::string, Formula> metas;
  std::map<std::string, Element> params;
};

enum class MatchFailure { NoMatch, SideCondition };

struct MatchResult {
  std::optional<Match> match;
  MatchFailure failure = MatchFailure::NoMatch;
  std::string detail;
};

/// Structural unification of f against the schema, then side conditions.
MatchResult match_schema(const Formula& f, const Schema& s, const Chain& chain);

/// Builds the instance. Does not check side conditions.
Formula instantiate(const Schema& s, const Match& m, const Chain& chain);

/// Maximal modal subformulas become fresh atoms; the result is a tautology
/// when it is top under every assignment into the chain. Returns the
/// falsifying assignment as text when there is one.
std::optional<std::string> refute_tautology(const Formula& f, const Chain& chain);

struct Justification {
  enum class Kind { Premise, Axiom, Taut, MP, Nec, Mon };
  Kind kind = Kind::Taut;
  std::string schema;                     // Axiom
  std::map<std::string, std::string> params;  // Axiom, as written
  std::optional<std::string> level;       // Nec, as written
  std::size_t i = 0, j = 0;               // references
};

struct ProofLine {
  std::size_t number = 0;    // as written
  std::size_t source_line = 0;
  std::string formula_text;
  std::string justification_text;
};

struct Proof {
  std::vector<std::string> premises;  // formula texts
  std::vector<ProofLine> lines;
};

/// Line-oriented proof text: "assume <formula>", "n. <formula> ; <just>",
/// '%' comment lines. Throws std::runtime_error on malformed structure.
Proof parse_proof(std::string_view text);

struct CheckResult {
  enum class Reason {
    None,
    Syntax,
    BadReference,
    UnknownSchema,
    NoMatch,
    SideCondition,
    ParamMismatch,
    RuleMismatch,
    NotATheorem,
    TautologyRefuted,
    Language,
  };
  bool accepted = false;
  std::size_t line = 0;  // proof line number (as written) of the failure
  Reason reason = Reason::None;
  std::string message;
  /// Lines derived without premises, in order.
  std::vector<Formula> theorems;
};

std::string_view reason_name(CheckResult::Reason r);

CheckResult check_proof(const Proof& proof, SystemId system, const Chain& chain);

struct SuiteOptions {
  /// Schemas whose order side conditions are ignored when instantiating.
  std::set<std::string> drop_order_conditions;
};

struct SuiteEntry {
  std::string schema;
  Formula instance;
  Verdict verdict;
};

/// Frame class the system is sound for: M general, CM crisp, others
/// preference models.
FrameClass frames_for(SystemId s);

/// Instantiates every schema of the system over the pool
/// {p, q, p -> q, p & q, #c for each c} and every admissible parameter
/// assignment, plus the derived principle sbox(b) phi -> box(b) sbox(b) box(b) phi
/// for the strict systems, and decides each within the bounds.
std::vector<SuiteEntry> axiom_soundness_suite(SystemId s, SearchBounds bounds,
                                              const SuiteOptions& options = {});

}  // namespace mvpref

#endif  // MVPREF_PROOF_HPP_
