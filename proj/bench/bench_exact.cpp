#include <benchmark/benchmark.h>

#include "scnr/circulant.hpp"
#include "scnr/families.hpp"
#include "scnr/reliability.hpp"

namespace {

scnr::Digraph subject(int n) { return scnr::near_one_optimal_spec(n).to_digraph(); }

void BM_Reference(benchmark::State& state) {
  const auto g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scnr::exact_scnr_reference(g));
}

void BM_MaskSerial(benchmark::State& state) {
  const auto g = subject(static_cast<int>(state.range(0)));
  scnr::EngineOptions options;
  options.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scnr::exact_scnr(g, options));
}

void BM_MaskParallel(benchmark::State& state) {
  const auto g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scnr::exact_scnr(g));
}

void BM_LowOrder(benchmark::State& state) {
  const auto g = subject(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(scnr::low_order_coefficients(g, 5));
}

}  // namespace

BENCHMARK(BM_Reference)->DenseRange(10, 16, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaskSerial)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaskParallel)->DenseRange(10, 22, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LowOrder)->Arg(21)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
