#include "fracosc/equiv.hpp"

#include <array>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <numbers>

#include "fracosc/charroot.hpp"

namespace fracosc {

double y_beta_model(double beta, double a0, double a1) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  if (beta == 1.0) return 1.0;
  const double exponent = a0 - a1 * beta;
  if (!(exponent > 0.0)) throw DomainError("power-law exponent a0 - a1*beta must be > 0");
  if (beta == 0.0) return 0.0;
  return std::pow(beta, exponent);
}

double omega_d_eq(const OscillatorParams& params) {
  const OscillatorParams p = validate_params(params);
  const double y = y_beta_model(p.beta, kFrequencyLaw);
  const double radicand = 1.0 + 2.0 * p.zeta - p.zeta * (2.0 + p.zeta) * y;
  if (!(radicand > 0.0)) throw DomainError("omega_d_eq: radicand must be > 0");
  return p.omega_n * std::sqrt(radicand);
}

double zeta_eq(const OscillatorParams& params) {
  const OscillatorParams p = validate_params(params);
  return p.zeta * y_beta_model(p.beta, kDampingLaw);
}

double y_beta_from_root(const OscillatorParams& params) {
  const OscillatorParams p = validate_params(params);
  if (!(p.zeta > 0.0)) throw DomainError("y_beta_from_root: zeta must be > 0");
  const double ratio = omega_d(p) / p.omega_n;
  const double m_beta = ratio * ratio;
  const double m0 = 1.0 + 2.0 * p.zeta;
  const double m1 = 1.0 - p.zeta * p.zeta;
  return (m0 - m_beta) / (m0 - m1);
}

PeakList find_positive_peaks(const TimeSeries& x, std::size_t j_max) {
  if (j_max < 2) throw DomainError("j_max must be >= 2");
  PeakList out;
  const double dt = x.grid().dt();
  for (std::size_t i = 1; i + 1 < x.size() && out.count() < j_max; ++i) {
    if (!x.is_valid(i - 1) || !x.is_valid(i) || !x.is_valid(i + 1)) continue;
    const double y0 = x[i - 1], y1 = x[i], y2 = x[i + 1];
    if (!(y1 > y0 && y1 >= y2 && y1 > 0.0)) continue;
    const double curvature = y0 - 2.0 * y1 + y2;
    double offset = 0.0;
    double peak = y1;
    if (curvature < 0.0) {
      offset = 0.5 * (y0 - y2) / curvature;
      peak = y1 - 0.25 * (y0 - y2) * offset;
    }
    out.times.push_back(x.grid().at(i) + offset * dt);
    out.amplitudes.push_back(peak);
  }
  if (out.count() < 2) throw PeakError("fewer than 2 positive peaks in the signal span");
  return out;
}

DecrementEstimate log_decrement_zeta(const PeakList& peaks, std::size_t j) {
  if (j < 2) throw DomainError("j must be >= 2");
  if (peaks.count() < j) throw PeakError("not enough peaks for the requested j");
  const double x1 = peaks.amplitudes[0];
  const double xj = peaks.amplitudes[j - 1];
  DecrementEstimate e;
  e.delta = std::log(x1 / xj) / static_cast<double>(j - 1);
  e.zeta = e.delta / std::sqrt(e.delta * e.delta + 4.0 * std::numbers::pi * std::numbers::pi);
  e.decaying = e.delta > 0.0;
  return e;
}

namespace {

struct NormalEquations {
  std::array<double, 3> jtj{};  // [00, 01, 11]
  std::array<double, 2> jtr{};
  double sse = 0.0;
};

NormalEquations assemble(std::span<const BetaSample> s, double a0, double a1) {
  NormalEquations ne;
  for (const auto& [beta, y] : s) {
    const double lb = std::log(beta);
    const double f = std::pow(beta, a0 - a1 * beta);
    const double r = y - f;
    const double j0 = f * lb;
    const double j1 = -f * beta * lb;
    ne.jtj[0] += j0 * j0;
    ne.jtj[1] += j0 * j1;
    ne.jtj[2] += j1 * j1;
    ne.jtr[0] += j0 * r;
    ne.jtr[1] += j1 * r;
    ne.sse += r * r;
  }
  return ne;
}

double sse_at(std::span<const BetaSample> s, double a0, double a1) {
  double sse = 0.0;
  for (const auto& [beta, y] : s) {
    const double r = y - std::pow(beta, a0 - a1 * beta);
    sse += r * r;
  }
  return sse;
}

}  // namespace

RegressionFit fit_power_law(std::span<const BetaSample> samples, double a0, double a1) {
  if (samples.size() < 3) throw DomainError("fit_power_law needs at least 3 samples");
  for (const auto& [beta, y] : samples) {
    if (!(beta > 0.0 && beta < 1.0)) throw DomainError("sample beta must lie in (0, 1)");
    if (!std::isfinite(y)) throw DomainError("sample y must be finite");
  }

  double lambda = 1e-3;
  int it = 0;
  bool converged = false;
  NormalEquations ne = assemble(samples, a0, a1);
  for (; it < kMaxFitIterations && !converged; ++it) {
    for (;;) {
      const double d00 = ne.jtj[0] * (1.0 + lambda);
      const double d11 = ne.jtj[2] * (1.0 + lambda);
      const double det = d00 * d11 - ne.jtj[1] * ne.jtj[1];
      if (!(det > 0.0) || !std::isfinite(det)) throw FitError("singular normal equations");
      const double s0 = (d11 * ne.jtr[0] - ne.jtj[1] * ne.jtr[1]) / det;
      const double s1 = (d00 * ne.jtr[1] - ne.jtj[1] * ne.jtr[0]) / det;
      const double trial_sse = sse_at(samples, a0 + s0, a1 + s1);
      if (std::isfinite(trial_sse) && trial_sse <= ne.sse) {
        a0 += s0;
        a1 += s1;
        lambda = std::max(lambda / 10.0, 1e-12);
        const double step = std::hypot(s0, s1) / (std::hypot(a0, a1) + 1e-12);
        converged = step < kFitStepTol;
        ne = assemble(samples, a0, a1);
        break;
      }
      lambda *= 10.0;
      if (lambda > 1e16) {
        // No descent direction left: the current point is a minimum to
        // working precision.
        converged = true;
        break;
      }
    }
  }
  if (!converged) throw FitError("Levenberg-Marquardt did not converge in 500 iterations");

  const std::size_t n = samples.size();
  const double det = ne.jtj[0] * ne.jtj[2] - ne.jtj[1] * ne.jtj[1];
  if (!(det > 0.0)) throw FitError("singular normal equations at the optimum");
  const double s2 = ne.sse / static_cast<double>(n - 2);
  const double var0 = s2 * ne.jtj[2] / det;
  const double var1 = s2 * ne.jtj[0] / det;
  const boost::math::students_t_distribution<double> t_dist(static_cast<double>(n - 2));
  const double q = boost::math::quantile(t_dist, 0.975);
  const double h0 = q * std::sqrt(var0);
  const double h1 = q * std::sqrt(var1);

  RegressionFit fit;
  fit.a0 = a0;
  fit.a1 = a1;
  fit.ci95_a0 = {a0 - h0, a0 + h0};
  fit.ci95_a1 = {a1 - h1, a1 + h1};
  fit.n_samples = n;
  fit.rmse = std::sqrt(ne.sse / static_cast<double>(n));
  fit.iterations = it;
  return fit;
}

}  // namespace fracosc
