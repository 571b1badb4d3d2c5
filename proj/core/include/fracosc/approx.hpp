#pragma once

// Closed-form approximate impulse response built from the equivalent
// parameters, and the exact and approximate frequency-response functions in
// terms of g = omega / omega_n.

#include <complex>
#include <cstdint>
#include <vector>

#include "fracosc/types.hpp"

namespace fracosc {

/// exp(-zeta_eq omega_n t) sin(omega_d_eq t) / omega_d_eq.
double impulse_approx(const OscillatorParams& p, double t);

/// impulse_approx on every grid point.
TimeSeries impulse_approx(const OscillatorParams& p, const TimeGrid& grid);

/// A complex FRF value together with a pole flag. When `pole` is set the
/// value is an infinite placeholder and must not be used.
struct FrfValue {
  std::complex<double> h;
  bool pole = false;
};

/// Denominators with |den| <= kPoleTol (1 + g^2) are treated as poles.
inline constexpr double kPoleTol = 1e-12;

/// 1 / (1 - g^2 + 2 zeta (i g)^beta), (i g)^beta on the principal branch.
/// At g = 0 the value is 1 for beta > 0 and 1 / (1 + 2 zeta) for beta = 0.
FrfValue frf_exact(const OscillatorParams& p, double g);

/// 1 / ((omega_d_eq / omega_n)^2 + (zeta_eq + i g)^2).
FrfValue frf_approx(const OscillatorParams& p, double g);

enum class FrfKind { exact, approx };

struct FrfCurve {
  std::vector<double> g;
  std::vector<double> mag;
  std::vector<double> phase;
  /// 0 where the sample sits on a pole.
  std::vector<std::uint8_t> valid;
};

/// Samples the FRF on n uniform points of [0, g_max].
FrfCurve frf_curve(const OscillatorParams& p, FrfKind which, double g_max, std::size_t n);

/// max_g ||h| - |h~|| / max_g |h| over samples valid in both curves.
double frf_relative_gap(const FrfCurve& exact, const FrfCurve& approx);

}  // namespace fracosc
