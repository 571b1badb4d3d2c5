#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fracosc/calibration.hpp"
#include "fracosc/equiv.hpp"

namespace {

std::vector<fracosc::BetaSample> synthetic(std::size_t n) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.01, 0.99);
  std::normal_distribution<double> noise(0.0, 0.01);
  std::vector<fracosc::BetaSample> out(n);
  for (auto& s : out) {
    s.beta = u(rng);
    s.y = fracosc::y_beta_model(s.beta, fracosc::kFrequencyLaw) + noise(rng);
  }
  return out;
}

void BM_FitPowerLaw(benchmark::State& state) {
  const auto samples = synthetic(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(fracosc::fit_power_law(samples).a0);
}
BENCHMARK(BM_FitPowerLaw)->Arg(1000)->Arg(10000);

void BM_CalibrationOmegaD(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fracosc::generate_calibration_samples(
        fracosc::FitTarget::omega_d, 1000, fracosc::kDefaultSeed, 1).samples.size());
}
BENCHMARK(BM_CalibrationOmegaD)->Unit(benchmark::kMillisecond);

}  // namespace
