#include <benchmark/benchmark.h>

#include "klein/characters.hpp"
#include "klein/hurwitz.hpp"

using namespace klein;

static void BM_Oracle(benchmark::State& state) {
  OracleOptions opt;
  opt.parallel = state.range(0) != 0;
  const int d = 6;
  Profiles p{Partition{2, 2, 1, 1}, Partition{3, 1, 1, 1}};
  for (auto _ : state) benchmark::DoNotOptimize(monodromy_oracle(Surface::projective_plane(), d, p, opt).solutions);
}
BENCHMARK(BM_Oracle)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CharTable(benchmark::State& state) {
  const bool parallel = state.range(1) != 0;
  for (auto _ : state) {
    CharTable t(static_cast<int>(state.range(0)), parallel);
    benchmark::DoNotOptimize(t.dim(0));
  }
}
BENCHMARK(BM_CharTable)->ArgNames({"d", "parallel"})->Args({12, 0})->Args({12, 1})->Args({16, 0})->Args({16, 1})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_CharacterSum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const bool parallel = state.range(1) != 0;
  Profiles p(4, Partition::gamma(d));
  p.push_back(Partition::cycle(d));
  char_table(d);
  for (auto _ : state) benchmark::DoNotOptimize(hurwitz_character(1, d, p, parallel));
}
BENCHMARK(BM_CharacterSum)->ArgNames({"d", "parallel"})->Args({14, 0})->Args({14, 1})->Args({18, 0})->Args({18, 1})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
