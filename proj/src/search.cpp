#include "mvpref/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "frames.hpp"

namespace mvpref {

BudgetExceeded::BudgetExceeded(double cardinality)
    : std::runtime_error([&] {
        std::ostringstream os;
        os << "exhaustive search would visit up to " << cardinality
           << " models, above the configured budget";
        return os.str();
      }()),
      cardinality_(cardinality) {}

namespace {

constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

std::vector<std::string> collect_vars(const std::vector<Query>& queries,
                                      const SearchBounds& bounds) {
  std::set<std::string> names;
  for (const auto& q : queries) {
    for (const auto& p : q.premises) {
      auto v = variables(p);
      names.insert(v.begin(), v.end());
    }
    auto v = variables(q.conclusion);
    names.insert(v.begin(), v.end());
  }
  for (const auto& name : names)
    if (std::find(bounds.variables.begin(), bounds.variables.end(), name) ==
        bounds.variables.end())
      throw std::invalid_argument("variable '" + name +
                                  "' is not among the search variables");
  return {names.begin(), names.end()};
}

std::uint64_t power(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

struct Layout {
  std::vector<std::vector<std::uint32_t>> premises;
  std::vector<std::uint32_t> conclusion;
};

// World where all premises are top and the conclusion is not, or npos.
std::size_t failing_world(const Layout& lay, std::size_t q,
                          const std::vector<Element>& out, std::size_t n,
                          Element top) {
  const Element* c = out.data() + static_cast<std::size_t>(lay.conclusion[q]) * n;
  for (std::size_t v = 0; v < n; ++v) {
    if (c[v] == top) continue;
    bool ok = true;
    for (auto s : lay.premises[q])
      if (out[static_cast<std::size_t>(s) * n + v] != top) {
        ok = false;
        break;
      }
    if (ok) return v;
  }
  return std::string::npos;
}

Model build_model(const SearchBounds& bounds, const std::vector<std::string>& vars,
                  std::size_t n, const std::vector<Element>& rel,
                  const std::vector<Element>& val) {
  std::vector<std::string> worlds;
  for (std::size_t i = 0; i < n; ++i) worlds.push_back("w" + std::to_string(i));
  Valuation v;
  for (std::size_t k = 0; k < vars.size(); ++k)
    v[vars[k]] = std::vector<Element>(val.begin() + k * n, val.begin() + (k + 1) * n);
  Model m = bounds.frames == FrameClass::Preference
                ? Model::preference(bounds.chain, worlds, FuzzyRelation(n, rel), v)
                : Model::general(bounds.chain, worlds, FuzzyRelation(n, rel), v);
  m.set_strict_cuts(bounds.strict_cuts);
  return m;
}

void atomic_min(std::atomic<std::uint64_t>& slot, std::uint64_t key) {
  std::uint64_t cur = slot.load(std::memory_order_relaxed);
  while (key < cur &&
         !slot.compare_exchange_weak(cur, key, std::memory_order_relaxed)) {
  }
}

struct Found {
  std::size_t n = 0;
  std::vector<Element> rel;
  std::vector<Element> val;
};

}  // namespace

std::vector<Verdict> check_batch(const std::vector<Query>& queries,
                                 const SearchBounds& bounds) {
  if (bounds.max_worlds < 1 || bounds.min_worlds < 1 ||
      bounds.min_worlds > bounds.max_worlds)
    throw std::invalid_argument("search bounds need 1 <= min_worlds <= max_worlds");
  const Chain& chain = *bounds.chain;
  const std::vector<std::string> vars = collect_vars(queries, bounds);
  if (bounds.enumerate_exhaustively) {
    const double card = exhaustive_cardinality(bounds, vars.size());
    if (card > bounds.budget) throw BudgetExceeded(card);
  }

  std::vector<Formula> roots;
  for (const auto& q : queries) {
    roots.insert(roots.end(), q.premises.begin(), q.premises.end());
    roots.push_back(q.conclusion);
  }
  const Program prog(roots, vars);
  if (prog.uses_strict() && bounds.frames != FrameClass::Preference)
    throw std::invalid_argument("strict modalities are only searched over preference frames");
  Layout lay;
  {
    std::size_t r = 0;
    for (const auto& q : queries) {
      lay.premises.emplace_back();
      for (std::size_t i = 0; i < q.premises.size(); ++i)
        lay.premises.back().push_back(prog.roots()[r++]);
      lay.conclusion.push_back(prog.roots()[r++]);
    }
  }

  const std::size_t nq = queries.size();
  const Element top = chain.top();
  std::vector<std::optional<Found>> found(nq);
  std::atomic<std::uint64_t> checked{0};

  if (bounds.enumerate_exhaustively) {
    for (std::size_t n = bounds.min_worlds; n <= bounds.max_worlds; ++n) {
      std::vector<std::size_t> open;
      for (std::size_t q = 0; q < nq; ++q)
        if (!found[q]) open.push_back(q);
      if (open.empty()) break;
      const FrameSpace space(chain, n, bounds.frames);
      const std::size_t slots = n * vars.size();
      const std::uint64_t nval = power(chain.size(), slots);
      const auto frames = static_cast<std::int64_t>(space.count());
      std::vector<std::atomic<std::uint64_t>> best(nq);
      for (auto& b : best) b.store(kNone);

      // Key order is (frame, valuation); a query is settled below key k once
      // its best failure is smaller than k.
      auto sweep_frame = [&](std::int64_t f, std::vector<Element>& rel,
                             std::vector<Element>& val, std::vector<Element>& out) {
        const std::uint64_t base = static_cast<std::uint64_t>(f) * nval;
        bool live = false;
        for (auto q : open) live = live || best[q].load(std::memory_order_relaxed) > base;
        if (!live || !space.decode(static_cast<std::uint64_t>(f), rel)) return;
        std::uint64_t local = 0;
        for (std::uint64_t vi = 0; vi < nval; ++vi) {
          const std::uint64_t key = base + vi;
          decode_valuation(vi, chain.size(), slots, val);
          evaluate(prog, chain, n, rel, val, out, bounds.strict_cuts);
          ++local;
          bool any_open = false;
          for (auto q : open) {
            if (best[q].load(std::memory_order_relaxed) <= key) continue;
            if (failing_world(lay, q, out, n, top) != std::string::npos)
              atomic_min(best[q], key);
            else
              any_open = true;
          }
          if (!any_open) break;
        }
        checked.fetch_add(local, std::memory_order_relaxed);
      };

      if (bounds.execution == Execution::Parallel) {
#pragma omp parallel
        {
          std::vector<Element> rel, val, out;
#pragma omp for schedule(dynamic, 8)
          for (std::int64_t f = 0; f < frames; ++f) sweep_frame(f, rel, val, out);
        }
      } else {
        std::vector<Element> rel, val, out;
        for (std::int64_t f = 0; f < frames; ++f) {
          bool live = false;
          for (auto q : open) live = live || best[q].load() == kNone;
          if (!live) break;
          sweep_frame(f, rel, val, out);
        }
      }

      for (auto q : open) {
        const std::uint64_t key = best[q].load();
        if (key == kNone) continue;
        Found fd;
        fd.n = n;
        space.decode(key / nval, fd.rel);
        decode_valuation(key % nval, chain.size(), slots, fd.val);
        found[q] = std::move(fd);
      }
    }
  }

  if (bounds.random_samples > 0) {
    std::mt19937_64 rng(bounds.seed);
    std::vector<Element> rel, val, out;
    for (std::size_t i = 0; i < bounds.random_samples; ++i) {
      if (std::all_of(found.begin(), found.end(), [](const auto& f) { return f.has_value(); }))
        break;
      const std::size_t n = std::uniform_int_distribution<std::size_t>(
          bounds.min_worlds, bounds.max_worlds)(rng);
      std::uniform_int_distribution<std::uint16_t> pick(
          0, static_cast<std::uint16_t>(chain.size() - 1));
      std::uniform_int_distribution<int> bit(0, 1);
      rel.assign(n * n, chain.bottom());
      for (auto& e : rel)
        e = bounds.frames == FrameClass::Crisp ? (bit(rng) ? top : chain.bottom())
                                               : Element{pick(rng)};
      if (bounds.frames == FrameClass::Preference) {
        for (std::size_t u = 0; u < n; ++u) rel[u * n + u] = top;
        rel = meet_transitive_closure(FuzzyRelation(n, rel)).entries();
      }
      val.resize(n * vars.size());
      for (auto& e : val) e = Element{pick(rng)};
      evaluate(prog, chain, n, rel, val, out, bounds.strict_cuts);
      checked.fetch_add(1);
      for (std::size_t q = 0; q < nq; ++q)
        if (!found[q] && failing_world(lay, q, out, n, top) != std::string::npos)
          found[q] = Found{n, rel, val};
    }
  }

  std::vector<Verdict> verdicts(nq);
  std::vector<Element> out;
  for (std::size_t q = 0; q < nq; ++q) {
    verdicts[q].models_checked = checked.load();
    if (!found[q]) continue;
    const Found& fd = *found[q];
    evaluate(prog, chain, fd.n, fd.rel, fd.val, out, bounds.strict_cuts);
    verdicts[q].status = Verdict::Status::CountermodelFound;
    verdicts[q].countermodel =
        Countermodel{build_model(bounds, vars, fd.n, fd.rel, fd.val),
                     failing_world(lay, q, out, fd.n, top)};
  }
  return verdicts;
}

Verdict is_valid_bounded(const Formula& f, const SearchBounds& bounds) {
  return check_batch({Query{{}, f}}, bounds).front();
}

Verdict consequence_bounded(const std::vector<Formula>& premises,
                            const Formula& f, const SearchBounds& bounds) {
  return check_batch({Query{premises, f}}, bounds).front();
}

void for_each_model(const SearchBounds& bounds,
                    const std::vector<std::string>& vars,
                    const std::function<bool(const Model&)>& visit) {
  const Chain& chain = *bounds.chain;
  std::vector<Element> rel, val;
  for (std::size_t n = bounds.min_worlds; n <= bounds.max_worlds; ++n) {
    const FrameSpace space(chain, n, bounds.frames);
    const std::size_t slots = n * vars.size();
    const std::uint64_t nval = power(chain.size(), slots);
    for (std::uint64_t f = 0; f < space.count(); ++f) {
      if (!space.decode(f, rel)) continue;
      for (std::uint64_t vi = 0; vi < nval; ++vi) {
        decode_valuation(vi, chain.size(), slots, val);
        if (!visit(build_model(bounds, vars, n, rel, val))) return;
      }
    }
  }
}

std::vector<Model> enumerate_models(const SearchBounds& bounds) {
  const double card = exhaustive_cardinality(bounds, bounds.variables.size());
  if (card > bounds.budget) throw BudgetExceeded(card);
  std::vector<Model> out;
  for_each_model(bounds, bounds.variables, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace mvpref
