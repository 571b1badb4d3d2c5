#pragma once

// Sample generation for refitting the equivalent-parameter power laws:
// random draws from the calibration box, the characteristic-root frequency
// target, and the logarithmic-decrement damping target.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "fracosc/equiv.hpp"
#include "fracosc/types.hpp"

namespace fracosc {

inline constexpr std::uint64_t kDefaultSeed = 20240001;

/// Uniform draws: beta in (beta_lo, beta_hi), zeta in [zeta_lo, zeta_hi],
/// omega_n in [omega_lo, omega_hi].
struct CalibrationBox {
  double beta_lo = 0.0;
  double beta_hi = 1.0;
  double zeta_lo = kCalibratedZetaMin;
  double zeta_hi = kCalibratedZetaMax;
  double omega_lo = 1.0;
  double omega_hi = 10.0;
};

/// Sample `index` of the stream identified by `seed`. Each index owns an
/// independent generator, so the draw does not depend on evaluation order.
OscillatorParams draw_calibration_sample(std::uint64_t seed, std::size_t index,
                                         const CalibrationBox& box = {});

enum class FitTarget {
  /// Y_beta from the characteristic root.
  omega_d,
  /// zeta_est / zeta from the logarithmic decrement of the impulse response.
  zeta_eq,
};

inline constexpr std::size_t kDecrementSamplesPerPeriod = 100;

/// Impulse response over (j + 1) periods of omega_d_eq, sampled at
/// `samples_per_period`. The stable series is used when it is valid on the
/// whole span, the FDM march otherwise.
TimeSeries decrement_signal(const OscillatorParams& p, std::size_t j = 2,
                            std::size_t samples_per_period = kDecrementSamplesPerPeriod);

/// Damping ratio recovered from the first and j-th positive peak of
/// decrement_signal.
DecrementEstimate decrement_estimate(const OscillatorParams& p, std::size_t j = 2,
                                     std::size_t samples_per_period = kDecrementSamplesPerPeriod);

/// y value of one calibration sample for `target`.
double calibration_target(FitTarget target, const OscillatorParams& p);

struct SampleFailure {
  std::size_t index;
  OscillatorParams params;
  std::string reason;
};

struct CalibrationRun {
  std::size_t requested = 0;
  std::vector<OscillatorParams> params;  // successful samples, index order
  std::vector<BetaSample> samples;
  std::vector<SampleFailure> failures;

  [[nodiscard]] double failure_fraction() const noexcept {
    return requested == 0 ? 0.0
                          : static_cast<double>(failures.size()) / static_cast<double>(requested);
  }
};

/// Draws `count` samples and evaluates the target for each, over `jobs`
/// threads. Results are identical for any job count.
CalibrationRun generate_calibration_samples(FitTarget target, std::size_t count,
                                            std::uint64_t seed, unsigned jobs = 1,
                                            const CalibrationBox& box = {});

}  // namespace fracosc
