#include <benchmark/benchmark.h>

#include "wlink/scan.hpp"

namespace {

void BM_Scan(benchmark::State& state) {
  wlink::ScanOptions opts;
  opts.index = 1;
  opts.max_weight = state.range(0);
  opts.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(wlink::scan_candidates(opts));
}
BENCHMARK(BM_Scan)->Arg(6)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_PassesConditionsZ16(benchmark::State& state) {
  const wlink::WeightVector w = wlink::validate_weights({1, 3, 5, 8});
  for (auto _ : state) benchmark::DoNotOptimize(wlink::passes_conditions(w, 16));
}
BENCHMARK(BM_PassesConditionsZ16);

}  // namespace
