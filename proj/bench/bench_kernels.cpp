#include <benchmark/benchmark.h>

#include "twistcert/closure.hpp"
#include "twistcert/density.hpp"

using namespace twistcert;

static void BM_ClosureSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quotient_closure_serial().size());
}
BENCHMARK(BM_ClosureSerial)->Unit(benchmark::kMillisecond);

static void BM_ClosureParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(quotient_closure().size());
}
BENCHMARK(BM_ClosureParallel)->Unit(benchmark::kMillisecond);

static DensityParams density_params(const benchmark::State& state) {
  DensityParams p;
  p.genus = static_cast<std::size_t>(state.range(0));
  p.blocks = 2;
  p.samples = 400;
  p.exponent_bound = 2;
  p.seed = 1;
  return p;
}

static void BM_DensitySerial(benchmark::State& state) {
  const DensityParams p = density_params(state);
  for (auto _ : state) benchmark::DoNotOptimize(density_experiment_serial(p).certified);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.samples));
}
BENCHMARK(BM_DensitySerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_DensityParallel(benchmark::State& state) {
  const DensityParams p = density_params(state);
  for (auto _ : state) benchmark::DoNotOptimize(density_experiment(p).certified);
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(p.samples));
}
BENCHMARK(BM_DensityParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
