#include "fracosc/charroot.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "fracosc/equiv.hpp"

namespace fracosc {
namespace {

std::complex<double> principal_pow(std::complex<double> s, double beta) {
  if (beta == 0.0) return 1.0;
  if (beta == 1.0) return s;
  return std::exp(beta * std::log(s));
}

void check_branch_point(const OscillatorParams& p, std::complex<double> s) {
  if (s == std::complex<double>(0.0) && p.beta > 0.0 && p.beta < 1.0)
    throw DomainError("char_residual: s = 0 is a branch point for 0 < beta < 1");
}

}  // namespace

std::complex<double> char_residual(const OscillatorParams& p, std::complex<double> s) {
  check_branch_point(p, s);
  return s * s + p.damping_coefficient() * principal_pow(s, p.beta) + p.omega_n * p.omega_n;
}

std::complex<double> char_derivative(const OscillatorParams& p, std::complex<double> s) {
  check_branch_point(p, s);
  std::complex<double> d = 2.0 * s;
  if (p.beta > 0.0) d += p.damping_coefficient() * p.beta * principal_pow(s, p.beta - 1.0);
  return d;
}

CharRoot solve_char_root(const OscillatorParams& params) {
  const OscillatorParams p = validate_params(params);
  if (!(p.zeta < 1.0)) throw DomainError("solve_char_root: zeta must be < 1");
  const double w = p.omega_n;
  const double tol = kRootResidualTol * w * w;

  auto finish = [&](std::complex<double> s, int iters) {
    return CharRoot{s, std::abs(char_residual(p, s)), iters};
  };
  if (p.beta == 0.0) return finish({0.0, w * std::sqrt(1.0 + 2.0 * p.zeta)}, 0);
  if (p.beta == 1.0) return finish({-p.zeta * w, w * std::sqrt(1.0 - p.zeta * p.zeta)}, 0);

  std::complex<double> s{-zeta_eq(p) * w, omega_d_eq(p)};
  std::complex<double> f = char_residual(p, s);
  double r = std::abs(f);
  int it = 0;
  for (; it < kMaxNewtonIterations; ++it) {
    if (r <= 4.0 * std::numeric_limits<double>::epsilon() * w * w) break;
    const std::complex<double> step = f / char_derivative(p, s);
    double lambda = 1.0;
    std::complex<double> trial;
    std::complex<double> f_trial;
    bool improved = false;
    for (int h = 0; h <= kMaxStepHalvings; ++h, lambda *= 0.5) {
      trial = s - lambda * step;
      if (trial.imag() <= 0.0) continue;  // stay in the upper half-plane
      f_trial = char_residual(p, trial);
      if (std::abs(f_trial) < r) {
        improved = true;
        break;
      }
    }
    if (!improved) break;
    const double moved = std::abs(trial - s);
    s = trial;
    f = f_trial;
    r = std::abs(f);
    if (moved <= 1e-15 * std::abs(s) && r <= tol) break;
  }
  CharRoot root{s, r, it};
  if (!(r <= tol)) {
    std::ostringstream os;
    os << "characteristic root did not converge for omega_n=" << p.omega_n << " zeta=" << p.zeta
       << " beta=" << p.beta << ": residual " << r << " after " << it << " iterations";
    throw RootNotConverged(os.str(), root);
  }
  return root;
}

double omega_d(const OscillatorParams& p) { return std::abs(solve_char_root(p).im()); }

}  // namespace fracosc
