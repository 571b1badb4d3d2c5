#pragma once

// Exact impulse response of the fractional oscillator from its bivariate
// Mittag-Leffler series, with truncation and precision diagnostics.
//
//   I(t) = t * E_{(2, 2-beta), 2}( -(w t)^2, -2 zeta (w t)^(2-beta) )
//        = sum_k (-1)^k sum_{m<=k} C(k,m) (2 zeta)^m (w t)^(2k - beta m) t
//                                  / Gamma(2k + 2 - beta m)
//
// Terms are grouped by diagonal k = l + m. Inside a diagonal every term has
// the same sign, so all cancellation happens between diagonals; that loss is
// what limits how far in time the series can be trusted.

#include <optional>
#include <vector>

#include "fracosc/types.hpp"

namespace fracosc {

enum class SeriesMode {
  /// Extended-precision log-domain terms with rescaled summation.
  stable,
  /// Direct Gamma/factorial/power evaluation in double, summed as-is. Kept to
  /// reproduce the blow-up of a straightforward implementation.
  naive,
};

inline constexpr double kDefaultSeriesTol = 1e-18;
inline constexpr int kMaxDiagonal = 400;
/// Consecutive negligible diagonals required before the sum is truncated.
inline constexpr int kStopBlocks = 5;
/// Results whose cancellation exceeds this many decimal digits are invalid.
inline constexpr double kMaxCancellationDigits = 14.0;

struct SeriesEval {
  double value = 0.0;
  /// Largest m and l indices among terms that were not negligible.
  int m_max = 0;
  int l_max = 0;
  /// Number of diagonals summed.
  int diagonals = 0;
  /// Twice the magnitude of the last diagonal. Heuristic, not a proven bound.
  double truncation_bound = 0.0;
  /// Decimal digits lost to cancellation: log10(max |term| / scale). For the
  /// impulse response the scale is the local amplitude sqrt(I^2 + (I'/w)^2),
  /// for the bare Mittag-Leffler function it is |value|.
  double cancellation = 0.0;
  /// sum |term|
  double abs_sum = 0.0;
  /// Some term's magnitude exceeded exp(ln(DBL_MAX) - 10).
  bool overflow = false;
  bool valid = true;
};

/// E_{(a1,a2),b}(z1, z2) = sum_{m,l} C(m+l, l) z1^l z2^m / Gamma(b + a1 l + a2 m).
/// Never throws for loss of precision; the result is flagged invalid instead.
SeriesEval biv_mittag_leffler(double a1, double a2, double b, double z1, double z2,
                              double tol = kDefaultSeriesTol);

struct ImpulseSeriesOptions {
  double tol = kDefaultSeriesTol;
  SeriesMode mode = SeriesMode::stable;
};

/// Evaluator for I_beta(t) with the time-independent parts of every term
/// precomputed. Immutable after construction, so one instance can be shared
/// across threads.
class ImpulseSeries {
 public:
  /// `t_hint` is the largest time the caller expects to evaluate; it only
  /// sizes the coefficient cache.
  explicit ImpulseSeries(const OscillatorParams& p, ImpulseSeriesOptions opts = {},
                         double t_hint = 0.0);

  [[nodiscard]] SeriesEval evaluate(double t) const;
  [[nodiscard]] SeriesEval operator()(double t) const { return evaluate(t); }

  /// Evaluates on every grid point; invalid evaluations are masked.
  [[nodiscard]] TimeSeries sample(const TimeGrid& grid, unsigned jobs = 1) const;

  [[nodiscard]] const OscillatorParams& params() const noexcept { return p_; }
  [[nodiscard]] const ImpulseSeriesOptions& options() const noexcept { return opts_; }

 private:
  struct Diagonal {
    std::vector<long double> coef;      // ln C(k,m) + m ln(2 zeta) - ln Gamma(2k + 2 - beta m)
    std::vector<long double> exponent;  // 2k - beta m, power of (w t)
  };

  [[nodiscard]] Diagonal make_diagonal(int k) const;
  [[nodiscard]] SeriesEval evaluate_stable(double t) const;
  [[nodiscard]] SeriesEval evaluate_naive(double t) const;

  OscillatorParams p_;
  ImpulseSeriesOptions opts_;
  int m_cap_per_diag_;  // 0 when zeta == 0 (only m = 0 terms survive)
  std::vector<Diagonal> cache_;
};

SeriesEval impulse_series(const OscillatorParams& p, double t, double tol = kDefaultSeriesTol,
                          SeriesMode mode = SeriesMode::stable);

/// sin(w_d t) / w_d with w_d = omega_n sqrt(1 + 2 zeta): the beta = 0 limit.
double impulse_beta0(const OscillatorParams& p, double t);

/// exp(-zeta omega_n t) sin(w_d t) / w_d with w_d = omega_n sqrt(1 - zeta^2):
/// the beta = 1 limit. Requires zeta < 1.
double impulse_beta1(const OscillatorParams& p, double t);

/// First grid time i*dt (i >= 1, i*dt <= t_max) at which the series evaluation
/// in `mode` is invalid, or nullopt when it stays valid throughout.
std::optional<double> blow_up_time(const OscillatorParams& p, SeriesMode mode, double t_max,
                                   double dt);

}  // namespace fracosc
