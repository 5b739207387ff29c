// Serial reference against the OpenMP kernels: the bounded sweep and the
// meet-transitive closure.
#include <benchmark/benchmark.h>

#include <random>

#include "mvpref/relation.hpp"
#include "mvpref/search.hpp"

using namespace mvpref;

namespace {

std::vector<Query> sample_queries(const Chain& c) {
  std::vector<Query> qs;
  for (const char* text : {"box(0.5) p -> box(1) p", "p -> box(0) dia(0) p", "sbox(0.5) p -> box(0.5) sbox(0.5) p",
                           "box (p -> q) -> (box p -> box q)", "dia (p & q) -> dia p & dia q"})
    qs.push_back({{}, parse(text, c)});
  return qs;
}

void sweep(benchmark::State& state, Execution mode) {
  SearchBounds b;
  b.chain = std::make_shared<const Chain>(Chain::lukasiewicz(3));
  b.max_worlds = static_cast<std::size_t>(state.range(0));
  b.execution = mode;
  const auto qs = sample_queries(*b.chain);
  for (auto _ : state) benchmark::DoNotOptimize(check_batch(qs, b));
}

void BM_SweepSerial(benchmark::State& s) { sweep(s, Execution::Serial); }
void BM_SweepParallel(benchmark::State& s) { sweep(s, Execution::Parallel); }
BENCHMARK(BM_SweepSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

FuzzyRelation random_relation(std::size_t n) {
  const Chain c = Chain::lukasiewicz(11);
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<std::uint16_t> pick(0, static_cast<std::uint16_t>(c.size() - 1));
  FuzzyRelation r(n, c.bottom());
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v) r(u, v) = Element{pick(rng)};
  return r;
}

void BM_ClosureReference(benchmark::State& state) {
  const FuzzyRelation r = random_relation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(meet_transitive_closure_reference(r));
}
void BM_ClosureParallel(benchmark::State& state) {
  const FuzzyRelation r = random_relation(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(meet_transitive_closure(r));
}
BENCHMARK(BM_ClosureReference)->Arg(32)->Arg(128);
BENCHMARK(BM_ClosureParallel)->Arg(32)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
