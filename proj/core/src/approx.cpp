#include "fracosc/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracosc/equiv.hpp"

namespace fracosc {

double impulse_approx(const OscillatorParams& params, double t) {
  const OscillatorParams p = validate_params(params);
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  const double wd = omega_d_eq(p);
  return std::exp(-zeta_eq(p) * p.omega_n * t) * std::sin(wd * t) / wd;
}

TimeSeries impulse_approx(const OscillatorParams& params, const TimeGrid& grid) {
  const OscillatorParams p = validate_params(params);
  const double wd = omega_d_eq(p);
  const double decay = zeta_eq(p) * p.omega_n;
  std::vector<double> x(grid.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = grid.at(i);
    if (!(t >= 0.0)) throw DomainError("t must be >= 0");
    x[i] = std::exp(-decay * t) * std::sin(wd * t) / wd;
  }
  return TimeSeries(grid, std::move(x));
}

namespace {

FrfValue invert(std::complex<double> den, double g) {
  if (std::abs(den) <= kPoleTol * (1.0 + g * g)) {
    const double inf = std::numeric_limits<double>::infinity();
    return {{inf, inf}, true};
  }
  return {1.0 / den, false};
}

void check_g(double g) {
  if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("g must be finite and >= 0");
}

}  // namespace

FrfValue frf_exact(const OscillatorParams& params, double g) {
  const OscillatorParams p = validate_params(params);
  check_g(g);
  std::complex<double> ig_beta;
  if (p.beta == 0.0) {
    ig_beta = 1.0;
  } else if (g == 0.0) {
    ig_beta = 0.0;
  } else {
    ig_beta = std::polar(std::pow(g, p.beta), p.beta * std::numbers::pi / 2.0);
  }
  return invert(1.0 - g * g + 2.0 * p.zeta * ig_beta, g);
}

FrfValue frf_approx(const OscillatorParams& params, double g) {
  const OscillatorParams p = validate_params(params);
  check_g(g);
  const double r = omega_d_eq(p) / p.omega_n;
  const std::complex<double> z{zeta_eq(p), g};
  return invert(r * r + z * z, g);
}

FrfCurve frf_curve(const OscillatorParams& p, FrfKind which, double g_max, std::size_t n) {
  if (!(g_max > 0.0) || !std::isfinite(g_max)) throw DomainError("g_max must be > 0");
  if (n < 2) throw DomainError("n must be >= 2");
  FrfCurve c;
  c.g.resize(n);
  c.mag.resize(n);
  c.phase.resize(n);
  c.valid.resize(n);
  const double dg = g_max / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const double g = static_cast<double>(i) * dg;
    const FrfValue v = which == FrfKind::exact ? frf_exact(p, g) : frf_approx(p, g);
    c.g[i] = g;
    c.valid[i] = v.pole ? 0 : 1;
    c.mag[i] = v.pole ? std::numeric_limits<double>::infinity() : std::abs(v.h);
    c.phase[i] = v.pole ? 0.0 : std::arg(v.h);
    if (c.phase[i] == -std::numbers::pi) c.phase[i] = std::numbers::pi;
  }
  return c;
}

double frf_relative_gap(const FrfCurve& exact, const FrfCurve& approx) {
  if (exact.g != approx.g) throw DomainError("FRF curves must share the g grid");
  double gap = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < exact.g.size(); ++i) {
    if (!exact.valid[i] || !approx.valid[i]) continue;
    gap = std::max(gap, std::abs(exact.mag[i] - approx.mag[i]));
    peak = std::max(peak, exact.mag[i]);
  }
  return peak > 0.0 ? gap / peak : 0.0;
}

}  // namespace fracosc
