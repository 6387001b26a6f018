// Serial reference vs OpenMP kernel for the Monte Carlo estimators, plus the
// analytic evaluators for scale.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "cogcap/capacity.hpp"
#include "cogcap/montecarlo.hpp"

namespace {

using namespace cogcap;

void BM_mc_su(benchmark::State& state, Execution exec) {
  const SystemParams p;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_su_capacity(p, 1.0, n, 42, exec).mean);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
  state.counters["threads"] = exec == Execution::parallel ? omp_get_max_threads() : 1;
}

void BM_mc_pu(benchmark::State& state, Execution exec) {
  const SystemParams p;
  const auto n = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(mc_pu_capacity(p, 1.0, n, 42, exec).mean);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_su_quadrature(benchmark::State& state) {
  const SystemParams p;
  for (auto _ : state) benchmark::DoNotOptimize(su_capacity_exact(p, 1.0).value);
}

void BM_pu_bounds(benchmark::State& state) {
  const SystemParams p;
  for (auto _ : state) benchmark::DoNotOptimize(pu_capacity_with_su_bounds(p, 1.0).upper.value);
}

void BM_series_60(benchmark::State& state) {
  const SystemParams p;
  for (auto _ : state) benchmark::DoNotOptimize(su_capacity_series(p, 50.0, 60).result.value);
}

}  // namespace

BENCHMARK_CAPTURE(BM_mc_su, serial, Execution::serial)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mc_su, parallel, Execution::parallel)->Arg(1 << 18)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mc_pu, serial, Execution::serial)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_mc_pu, parallel, Execution::parallel)->Arg(1 << 20)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_su_quadrature)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_pu_bounds);
BENCHMARK(BM_series_60);

BENCHMARK_MAIN();
