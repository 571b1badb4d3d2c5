#include <benchmark/benchmark.h>

#include "fracosc/fdm.hpp"

namespace {

// Full-memory history makes the march quadratic in the step count.
void BM_ImpulseFdm(benchmark::State& state) {
  const fracosc::OscillatorParams p{1.0, 0.05, 0.5};
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto grid = fracosc::linspace_grid(1e-3 * static_cast<double>(n - 1), n);
  for (auto _ : state) benchmark::DoNotOptimize(fracosc::impulse_fdm(p, grid).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ImpulseFdm)->RangeMultiplier(4)->Range(1024, 16384)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_GlWeights(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fracosc::gl_weights(0.5, static_cast<std::size_t>(state.range(0))).w);
}
BENCHMARK(BM_GlWeights)->Arg(100000);

}  // namespace
