// Parallel sweep against the serial reference on the same instances.
//   qep_bench --benchmark_filter=Sweep

#include <benchmark/benchmark.h>
#include <omp.h>

#include "qep/benchmark.hpp"

namespace {

qep::BenchmarkOptions options(std::size_t n, qep::Variant variant) {
  qep::BenchmarkOptions opt;
  opt.sizes = {n};
  opt.count = 20;
  opt.seed = 2024;
  opt.solver.variant = variant;
  return opt;
}

void BM_SweepParallel(benchmark::State& state) {
  const auto opt = options(static_cast<std::size_t>(state.range(0)), static_cast<qep::Variant>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qep::run_benchmark(opt));
  state.counters["threads"] = omp_get_max_threads();
}

void BM_SweepSerial(benchmark::State& state) {
  const auto opt = options(static_cast<std::size_t>(state.range(0)), static_cast<qep::Variant>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(qep::reference::run_benchmark_serial(opt));
}

void sizes(benchmark::internal::Benchmark* b) {
  for (int variant : {0, 1})
    for (int n : {5, 10, 20, 50}) b->Args({n, variant});
  b->ArgNames({"n", "ng2"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_SweepParallel)->Apply(sizes);
BENCHMARK(BM_SweepSerial)->Apply(sizes);

BENCHMARK_MAIN();
