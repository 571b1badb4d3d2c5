#include "fracosc/fdm.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracosc/diagnostics.hpp"

namespace fracosc {

GlWeights gl_weights(double beta, std::size_t n) {
  if (!(beta >= 0.0 && beta <= 1.0)) throw DomainError("beta must lie in [0, 1]");
  if (n < 1) throw DomainError("n must be >= 1");
  GlWeights g{beta, std::vector<double>(n)};
  g.w[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j)
    g.w[j] = (1.0 - (beta + 1.0) / static_cast<double>(j)) * g.w[j - 1];
  return g;
}

namespace {

// sum_{j=lo..hi} w[j] x[i-j]
double memory_sum(const std::vector<double>& w, const std::vector<double>& x, std::size_t i,
                  std::size_t lo, std::size_t hi) {
  double s = 0.0;
  for (std::size_t j = lo; j <= hi; ++j) s += w[j] * x[i - j];
  return s;
}

}  // namespace

TimeSeries fdm_solve(const OscillatorParams& params, const Forcing& h, const TimeGrid& grid,
                     const FdmOptions& opts) {
  const OscillatorParams p = validate_params(params);
  if (grid.t0() != 0.0) throw DomainError("fdm_solve: grid must start at t = 0");
  if (grid.size() < 2) throw DomainError("fdm_solve: grid needs at least 2 points");
  if (!(grid.dt() > 0.0)) throw DomainError("fdm_solve: dt must be > 0");
  if (!h) throw DomainError("fdm_solve: forcing function is empty");

  const double dt = grid.dt();
  const double wdt = p.omega_n * dt;
  if (wdt >= 0.1) {
    std::ostringstream os;
    os << "fdm: omega_n*dt = " << wdt << " >= 0.1; the march is coarse";
    warn(os.str());
  }

  const std::size_t n = grid.size();
  std::vector<double> hv(n);
  double h_max = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    hv[i] = h(grid.at(i));
    if (!std::isfinite(hv[i])) throw DomainError("fdm_solve: forcing is not finite");
    h_max = std::max(h_max, std::abs(hv[i]));
  }
  const double w2 = p.omega_n * p.omega_n;
  const double limit = kFdmBlowupFactor *
                       std::max(h_max / w2, std::abs(opts.initial_velocity) / p.omega_n);

  const GlWeights gl = gl_weights(p.beta, n);
  const double c = 2.0 * p.zeta * std::pow(wdt, 2.0 - p.beta);
  const double k = wdt * wdt;
  const double dt2 = dt * dt;

  std::vector<double> x(n, 0.0);
  x[1] = opts.initial_velocity * dt;
  if (opts.start == FdmStart::taylor) x[1] += 0.5 * hv[0] * dt2;

  for (std::size_t i = 1; i + 1 < n; ++i) {
    double next = 0.0;
    switch (opts.scheme) {
      case FdmScheme::explicit_level:
        next = dt2 * hv[i] + (2.0 - k) * x[i] - x[i - 1] - c * memory_sum(gl.w, x, i, 0, i);
        break;
      case FdmScheme::implicit_damping:
        next = (dt2 * hv[i] + (2.0 - k) * x[i] - x[i - 1] -
                c * memory_sum(gl.w, x, i + 1, 1, i + 1)) /
               (1.0 + c);
        break;
      case FdmScheme::implicit_stiffness:
        next = (dt2 * hv[i + 1] + 2.0 * x[i] - x[i - 1] -
                c * memory_sum(gl.w, x, i + 1, 1, i + 1)) /
               (1.0 + c + k);
        break;
    }
    if (!std::isfinite(next) || std::abs(next) > limit) {
      std::ostringstream os;
      os << "fdm march diverged at step " << i + 1 << " (t = " << grid.at(i + 1) << ")";
      throw FdmInstability(os.str(), i + 1, grid.at(i + 1));
    }
    x[i + 1] = next;
  }
  return TimeSeries(grid, std::move(x));
}

TimeSeries impulse_fdm(const OscillatorParams& p, const TimeGrid& grid, FdmScheme scheme) {
  FdmOptions opts;
  opts.scheme = scheme;
  opts.initial_velocity = 1.0;
  return fdm_solve(p, [](double) { return 0.0; }, grid, opts);
}

}  // namespace fracosc
