// Serial reference vs OpenMP kernels. Results must match; only time differs.

#include <array>

#include <benchmark/benchmark.h>

#include "cdom/compliance.hpp"
#include "cdom/parallel.hpp"
#include "cdom/search.hpp"

namespace {

using cdom::Execution;

void BM_ComputeF(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cdom::compute_f(n, exec).f);
}

void BM_RouteEquivalence(benchmark::State& state, Execution exec) {
  const std::array<int, 3> ks{1, 2, 3};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cdom::compliance_route_disagreements(n, ks, exec));
}

void BM_Enumerate(benchmark::State& state, Execution exec) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(cdom::enumerate_graphs(n, cdom::kMaxOrder, 1 << 20, exec).size());
}

BENCHMARK_CAPTURE(BM_ComputeF, serial, Execution::Serial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ComputeF, parallel, Execution::Parallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RouteEquivalence, serial, Execution::Serial)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_RouteEquivalence, parallel, Execution::Parallel)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, serial, Execution::Serial)->Arg(7)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Enumerate, parallel, Execution::Parallel)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
