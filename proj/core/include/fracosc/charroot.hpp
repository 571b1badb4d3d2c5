#pragma once

// Roots of the fractional characteristic equation
//   s^2 + 2 zeta omega_n^(2-beta) s^beta + omega_n^2 = 0,
// with s^beta on the principal branch. The damped frequency of the
// oscillator is |Im s| of the upper-half-plane root.

#include <complex>
#include <stdexcept>

#include "fracosc/types.hpp"

namespace fracosc {

struct CharRoot {
  std::complex<double> s;
  /// |characteristic function| at s.
  double residual = 0.0;
  int iterations = 0;

  [[nodiscard]] double re() const { return s.real(); }
  [[nodiscard]] double im() const { return s.imag(); }
};

/// Thrown when Newton iteration fails to reach the residual tolerance.
class RootNotConverged : public std::runtime_error {
 public:
  RootNotConverged(const std::string& what, CharRoot last)
      : std::runtime_error(what), last_(last) {}
  [[nodiscard]] const CharRoot& last_iterate() const noexcept { return last_; }

 private:
  CharRoot last_;
};

inline constexpr int kMaxNewtonIterations = 200;
inline constexpr int kMaxStepHalvings = 30;
/// Accepted |residual| relative to omega_n^2.
inline constexpr double kRootResidualTol = 1e-10;

/// s^2 + 2 zeta omega_n^(2-beta) s^beta + omega_n^2.
std::complex<double> char_residual(const OscillatorParams& p, std::complex<double> s);

/// d/ds of char_residual.
std::complex<double> char_derivative(const OscillatorParams& p, std::complex<double> s);

/// Upper-half-plane root nearest the closed-form equivalent-parameter guess,
/// found by damped Newton. beta in {0, 1} returns the exact root directly.
CharRoot solve_char_root(const OscillatorParams& p);

/// |Im| of solve_char_root(p).
double omega_d(const OscillatorParams& p);

}  // namespace fracosc
