// Serial reference vs OpenMP kernels. Each benchmark takes the execution mode
// as its argument: 0 = serial, 1 = parallel.

#include <benchmark/benchmark.h>

#include "nmfr/fixtures.hpp"
#include "nmfr/patterns.hpp"
#include "nmfr/realize.hpp"
#include "nmfr/rigidity.hpp"

using namespace nmfr;

namespace {

Execution mode(const benchmark::State& state) { return state.range(0) == 0 ? Execution::Serial : Execution::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_Enumerate6x5(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_patterns(6, 5, 4, 13, table1_filters(), mode(state)));
  }
  label(state);
}
BENCHMARK(BM_Enumerate6x5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_Enumerate7x6(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_patterns(7, 6, 4, 13, table1_filters(), mode(state)));
  }
  label(state);
}
BENCHMARK(BM_Enumerate7x6)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_KruskalRankFixture(benchmark::State& state) {
  const auto& fx = reference_fixtures()[0];
  const DualConeGenerators z = build_dual_generators(FactorizationPair(fx.a, fx.b));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kruskal_rank(z, kDefaultKruskalBudget, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_KruskalRankFixture)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_RealizePattern(benchmark::State& state) {
  const auto& fx = reference_fixtures()[0];
  const ZeroPattern p = FactorizationPair(fx.a, fx.b).zero_pattern();
  RealizationSearchConfig cfg;
  cfg.seed = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(realize_pattern(p, cfg, mode(state)));
  }
  label(state);
}
BENCHMARK(BM_RealizePattern)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
