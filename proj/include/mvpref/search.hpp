#ifndef MVPREF_SEARCH_HPP_
#define MVPREF_SEARCH_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvpref/formula.hpp"
#include "mvpref/kernel.hpp"
#include "mvpref/model.hpp"

namespace mvpref {

enum class FrameClass {
  Preference,  // reflexive, meet-transitive
  General,     // any B-valued relation
  Crisp,       // any {0,1}-valued relation
};

enum class Execution { Parallel, Serial };

struct SearchBounds {
  std::size_t max_worlds = 3;
  std::size_t min_worlds = 1;
  ChainPtr chain = std::make_shared<const Chain>(Chain::lukasiewicz(3));
  std::vector<std::string> variables{"p", "q"};
  bool enumerate_exhaustively = true;
  std::size_t random_samples = 0;
  std::uint64_t seed = 1;
  FrameClass frames = FrameClass::Preference;
  double budget = 1e8;
  StrictCuts strict_cuts = StrictCuts::CutThenStrict;
  Execution execution = Execution::Parallel;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(double cardinality);
  double cardinality() const noexcept { return cardinality_; }

 private:
  double cardinality_;
};

struct Countermodel {
  Model model;
  std::size_t world;
};

struct Verdict {
  enum class Status { ValidWithinBounds, CountermodelFound };
  Status status = Status::ValidWithinBounds;
  std::optional<Countermodel> countermodel;
  /// Models evaluated. Parallel runs may look at a few more than serial ones
  /// before every query is settled.
  std::uint64_t models_checked = 0;

  bool valid() const noexcept { return status == Status::ValidWithinBounds; }
};

/// A local consequence question: premises |- conclusion.
struct Query {
  std::vector<Formula> premises;
  Formula conclusion;
};

/// Relations of the class on n worlds, in enumeration order.
std::vector<FuzzyRelation> enumerate_frames(const Chain& chain, std::size_t n,
                                            FrameClass frames);

/// Number of (relation, valuation) pairs the exhaustive mode may visit:
/// |B|^(n^2 + n*vars) at n = max_worlds.
double exhaustive_cardinality(const SearchBounds& bounds, std::size_t vars);

/// Visits every model within the bounds, over the given variables, in
/// enumeration order (world count, relation index, valuation index).
/// The callback returns false to stop early.
void for_each_model(const SearchBounds& bounds,
                    const std::vector<std::string>& vars,
                    const std::function<bool(const Model&)>& visit);

/// All models over bounds.variables.
std::vector<Model> enumerate_models(const SearchBounds& bounds);

Verdict is_valid_bounded(const Formula& f, const SearchBounds& bounds);
Verdict consequence_bounded(const std::vector<Formula>& premises,
                            const Formula& f, const SearchBounds& bounds);

/// Decides many queries in one sweep; subformulas shared between queries
/// are evaluated once per model. The first countermodel of each query is
/// the least in enumeration order, regardless of execution mode.
std::vector<Verdict> check_batch(const std::vector<Query>& queries,
                                 const SearchBounds& bounds);

}  // namespace mvpref

#endif  // MVPREF_SEARCH_HPP_
