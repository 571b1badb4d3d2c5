#include "fracosc/calibration.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "fracosc/charroot.hpp"
#include "fracosc/fdm.hpp"
#include "fracosc/series.hpp"
#include "parallel.hpp"

namespace fracosc {

OscillatorParams draw_calibration_sample(std::uint64_t seed, std::size_t index,
                                         const CalibrationBox& box) {
  const auto lo32 = [](std::uint64_t v) { return static_cast<std::uint32_t>(v); };
  const auto hi32 = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  const std::uint64_t idx = index;
  std::seed_seq seq{lo32(seed), hi32(seed), lo32(idx), hi32(idx)};
  std::mt19937_64 rng(seq);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  double u = 0.0;
  do u = unit(rng);
  while (u == 0.0);  // beta is drawn from the open interval
  OscillatorParams p;
  p.beta = box.beta_lo + (box.beta_hi - box.beta_lo) * u;
  p.zeta = box.zeta_lo + (box.zeta_hi - box.zeta_lo) * unit(rng);
  p.omega_n = box.omega_lo + (box.omega_hi - box.omega_lo) * unit(rng);
  return p;
}

TimeSeries decrement_signal(const OscillatorParams& params, std::size_t j,
                            std::size_t samples_per_period) {
  const OscillatorParams p = validate_params(params);
  if (j < 2) throw DomainError("j must be >= 2");
  if (samples_per_period < 40) throw DomainError("samples_per_period must be >= 40");
  const double period = 2.0 * std::numbers::pi / omega_d_eq(p);
  const std::size_t n = (j + 1) * samples_per_period + 1;
  const TimeGrid grid = linspace_grid(static_cast<double>(j + 1) * period, n);

  const ImpulseSeries series(p, {}, grid.t_end());
  TimeSeries x = series.sample(grid);
  if (x.all_valid()) return x;

  // March at omega_n dt <= 1e-3 and keep every stride-th sample.
  const double dt_max = 1e-3 / p.omega_n;
  const auto stride = static_cast<std::size_t>(std::ceil(grid.dt() / dt_max));
  return decimate(impulse_fdm(p, grid.refined(stride)), stride);
}

DecrementEstimate decrement_estimate(const OscillatorParams& p, std::size_t j,
                                     std::size_t samples_per_period) {
  const TimeSeries x = decrement_signal(p, j, samples_per_period);
  return log_decrement_zeta(find_positive_peaks(x, j), j);
}

double calibration_target(FitTarget target, const OscillatorParams& p) {
  switch (target) {
    case FitTarget::omega_d:
      return y_beta_from_root(p);
    case FitTarget::zeta_eq:
      if (!(p.zeta > 0.0)) throw DomainError("zeta must be > 0 for the damping ratio target");
      return decrement_estimate(p).zeta / p.zeta;
  }
  throw DomainError("unknown fit target");
}

CalibrationRun generate_calibration_samples(FitTarget target, std::size_t count,
                                            std::uint64_t seed, unsigned jobs,
                                            const CalibrationBox& box) {
  struct Slot {
    OscillatorParams p;
    std::optional<double> y;
    std::string error;
  };
  std::vector<Slot> slots(count);
  detail::parallel_for(count, jobs, [&](std::size_t i) {
    Slot& s = slots[i];
    s.p = draw_calibration_sample(seed, i, box);
    try {
      const double y = calibration_target(target, s.p);
      if (std::isfinite(y))
        s.y = y;
      else
        s.error = "non-finite target value";
    } catch (const std::exception& e) {
      s.error = e.what();
    }
  });

  CalibrationRun run;
  run.requested = count;
  for (std::size_t i = 0; i < count; ++i) {
    if (slots[i].y) {
      run.params.push_back(slots[i].p);
      run.samples.push_back({slots[i].p.beta, *slots[i].y});
    } else {
      run.failures.push_back({i, slots[i].p, slots[i].error});
    }
  }
  return run;
}

}  // namespace fracosc
