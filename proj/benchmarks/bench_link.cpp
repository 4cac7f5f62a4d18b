#include <benchmark/benchmark.h>

#include "wlink/milnor.hpp"
#include "wlink/wring.hpp"

namespace {

using wlink::validate_weights;

void BM_DivisorZ16(benchmark::State& state) {
  const wlink::WeightVector w = validate_weights({1, 3, 5, 8});
  for (auto _ : state) benchmark::DoNotOptimize(wlink::divisor_of_delta(w, 16));
}
BENCHMARK(BM_DivisorZ16);

// Divisor of a Brieskorn-Pham link x^a + y^b + z^c + u^e with pairwise
// coprime exponents; the number of Lambda-ring products grows with the arity.
void BM_DivisorBrieskorn(benchmark::State& state) {
  const std::int64_t d = 2 * 3 * 5 * 7;
  const wlink::WeightVector w = validate_weights({d / 2, d / 3, d / 5, d / 7});
  for (auto _ : state) benchmark::DoNotOptimize(wlink::divisor_of_delta(w, d));
}
BENCHMARK(BM_DivisorBrieskorn);

void BM_ExpandZ16(benchmark::State& state) {
  const auto p = wlink::factored_char_poly(wlink::divisor_of_delta(validate_weights({1, 3, 5, 8}), 16));
  for (auto _ : state) benchmark::DoNotOptimize(wlink::expand(p));
}
BENCHMARK(BM_ExpandZ16);

// Dense expansion for the Fermat quartic family, mu = (d - 1)^4.
void BM_ExpandFermat(benchmark::State& state) {
  const std::int64_t d = state.range(0);
  const auto p = wlink::factored_char_poly(
      wlink::divisor_of_delta(validate_weights({1, 1, 1, 1}), d));
  for (auto _ : state) benchmark::DoNotOptimize(wlink::expand(p));
}
BENCHMARK(BM_ExpandFermat)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace
