#include <benchmark/benchmark.h>

#include "fracosc/response.hpp"

namespace {

void BM_ConvolveSampled(benchmark::State& state) {
  const fracosc::OscillatorParams p{1.0, 0.05, 0.5};
  const auto grid = fracosc::linspace_grid(25.0, static_cast<std::size_t>(state.range(0)));
  const fracosc::TimeSeries kernel = fracosc::ImpulseKernel::approx(p).sample(grid);
  const auto h = fracosc::Excitation::cosine(1.0, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(fracosc::convolve_sampled(h, kernel).size());
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvolveSampled)->RangeMultiplier(2)->Range(1024, 8192)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_RunCase(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fracosc::run_case("3", std::nullopt, std::nullopt, 1).residual_rel);
}
BENCHMARK(BM_RunCase)->Unit(benchmark::kMillisecond)->Iterations(3);

}  // namespace
