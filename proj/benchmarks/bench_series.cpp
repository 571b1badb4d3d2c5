#include <benchmark/benchmark.h>

#include "fracosc/series.hpp"

namespace {

// Cost grows with omega_n t, so sweep it directly.
void BM_ImpulseSeriesStable(benchmark::State& state) {
  const fracosc::OscillatorParams p{1.0, 0.05, 0.5};
  const double t = static_cast<double>(state.range(0));
  const fracosc::ImpulseSeries s(p, {}, t);
  for (auto _ : state) benchmark::DoNotOptimize(s.evaluate(t).value);
}
BENCHMARK(BM_ImpulseSeriesStable)->Arg(1)->Arg(5)->Arg(10)->Arg(20);

void BM_ImpulseSeriesNaive(benchmark::State& state) {
  const fracosc::OscillatorParams p{1.0, 0.05, 0.5};
  const double t = static_cast<double>(state.range(0));
  const fracosc::ImpulseSeries s(p, {fracosc::kDefaultSeriesTol, fracosc::SeriesMode::naive}, t);
  for (auto _ : state) benchmark::DoNotOptimize(s.evaluate(t).value);
}
BENCHMARK(BM_ImpulseSeriesNaive)->Arg(1)->Arg(5)->Arg(10)->Arg(20);

void BM_ImpulseSeriesSample(benchmark::State& state) {
  const fracosc::OscillatorParams p{1.0, 0.05, 0.5};
  const auto grid = fracosc::linspace_grid(20.0, static_cast<std::size_t>(state.range(0)));
  const fracosc::ImpulseSeries s(p, {}, grid.t_end());
  for (auto _ : state) benchmark::DoNotOptimize(s.sample(grid).size());
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_ImpulseSeriesSample)->Arg(201)->Arg(2001)->Unit(benchmark::kMillisecond);

}  // namespace
