#pragma once

// Equivalent viscous parameters of the fractional oscillator: the closed-form
// damped frequency and damping ratio, the quantities they were fitted to, and
// the least-squares machinery used to refit them.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fracosc/types.hpp"

namespace fracosc {

/// Exponent constants of a model y = beta^(a0 - a1 beta).
struct PowerLaw {
  double a0;
  double a1;
};

/// Y_beta = beta^(2.24 - 0.63 beta), the transition of (w_d / w_n)^2.
inline constexpr PowerLaw kFrequencyLaw{2.24, 0.63};
/// zeta_eq / zeta = beta^(0.95 - 0.85 beta).
inline constexpr PowerLaw kDampingLaw{0.95, 0.85};

/// beta^(a0 - a1 beta) with 0^positive = 0 and 1^anything = 1. Throws
/// DomainError when the exponent is not positive at beta < 1.
double y_beta_model(double beta, double a0, double a1);
inline double y_beta_model(double beta, PowerLaw law) { return y_beta_model(beta, law.a0, law.a1); }

/// omega_n sqrt(1 + 2 zeta - zeta (2 + zeta) Y_beta).
double omega_d_eq(const OscillatorParams& p);

/// zeta beta^(0.95 - 0.85 beta).
double zeta_eq(const OscillatorParams& p);

/// (M_0 - M_beta) / (M_0 - M_1) with M_beta = (omega_d / omega_n)^2 from the
/// characteristic root, M_0 = 1 + 2 zeta, M_1 = 1 - zeta^2. Requires zeta > 0.
double y_beta_from_root(const OscillatorParams& p);

struct PeakList {
  std::vector<double> times;
  std::vector<double> amplitudes;

  [[nodiscard]] std::size_t count() const noexcept { return times.size(); }
};

class PeakError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Positive local maxima of x (first difference changes sign from + to -),
/// each refined by a parabola through the three surrounding samples. At most
/// j_max peaks are returned; fewer than two is an error. Masked samples never
/// take part in a peak.
PeakList find_positive_peaks(const TimeSeries& x, std::size_t j_max);

struct DecrementEstimate {
  /// delta / sqrt(delta^2 + 4 pi^2)
  double zeta = 0.0;
  /// ln(x_1 / x_j) / (j - 1)
  double delta = 0.0;
  /// False when x_j >= x_1, i.e. the signal did not decay.
  bool decaying = true;
};

/// Logarithmic-decrement damping ratio from the first and j-th positive peak.
DecrementEstimate log_decrement_zeta(const PeakList& peaks, std::size_t j);

struct BetaSample {
  double beta;
  double y;
};

struct RegressionFit {
  double a0 = 0.0;
  double a1 = 0.0;
  std::pair<double, double> ci95_a0{0.0, 0.0};
  std::pair<double, double> ci95_a1{0.0, 0.0};
  std::size_t n_samples = 0;
  double rmse = 0.0;
  int iterations = 0;

  /// Fits on fewer than 100 samples are reported but flagged.
  [[nodiscard]] bool underpowered() const noexcept { return n_samples < 100; }
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxFitIterations = 500;
inline constexpr double kFitStepTol = 1e-10;

/// Levenberg-Marquardt least squares for y = beta^(a0 - a1 beta), starting
/// from (init_a0, init_a1). Confidence intervals are Student-t intervals from
/// the linearised covariance at the optimum. Needs at least 3 samples with
/// beta in (0, 1).
RegressionFit fit_power_law(std::span<const BetaSample> samples, double init_a0 = 1.0,
                            double init_a1 = 1.0);

}  // namespace fracosc
