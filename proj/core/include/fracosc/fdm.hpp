#pragma once

// Grunwald-Letnikov finite-difference solver for
//   x'' + 2 zeta omega_n^(2-beta) D^beta x + omega_n^2 x = h(t),  x(0) = 0,
// marching on a uniform grid with the full memory of the fractional term.

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

#include "fracosc/types.hpp"

namespace fracosc {

struct GlWeights {
  double beta = 0.0;
  /// w[0] = 1, w[j] = (1 - (beta + 1) / j) w[j-1].
  std::vector<double> w;
};

GlWeights gl_weights(double beta, std::size_t n);

/// Raised when the march diverges.
class FdmInstability : public std::runtime_error {
 public:
  FdmInstability(const std::string& what, std::size_t step, double t)
      : std::runtime_error(what), step_(step), t_(t) {}
  [[nodiscard]] std::size_t step() const noexcept { return step_; }
  [[nodiscard]] double time() const noexcept { return t_; }

 private:
  std::size_t step_;
  double t_;
};

/// Where each term of the discretised equation is evaluated. With
/// c = 2 zeta (omega_n dt)^(2-beta) and k = (omega_n dt)^2:
enum class FdmScheme {
  /// x[i+1] = dt^2 h[i] + 2x[i] - x[i-1] - c sum_{j=0..i} w[j] x[i-j] - k x[i]
  explicit_level,
  /// Memory sum shifted to level i+1 with w[0] x[i+1] moved to the left:
  /// (1 + c) x[i+1] = dt^2 h[i] + 2x[i] - x[i-1] - c sum_{j=1..i+1} w[j] x[i+1-j] - k x[i]
  implicit_damping,
  /// As implicit_damping with the stiffness also at i+1:
  /// (1 + c + k) x[i+1] = dt^2 h[i+1] + 2x[i] - x[i-1] - c sum_{j=1..i+1} w[j] x[i+1-j]
  implicit_stiffness,
};

enum class FdmStart {
  /// x[1] = v0 dt + h(0) dt^2 / 2
  taylor,
  /// x[1] = v0 dt
  velocity_only,
};

struct FdmOptions {
  FdmScheme scheme = FdmScheme::explicit_level;
  FdmStart start = FdmStart::taylor;
  double initial_velocity = 0.0;
};

using Forcing = std::function<double(double)>;

/// Divergence threshold: |x| above this multiple of max(max|h| / omega_n^2,
/// |v0| / omega_n) aborts the march.
inline constexpr double kFdmBlowupFactor = 1e6;

/// Marches the oscillator on `grid` (t0 must be 0, at least 2 points). Warns
/// when omega_n dt >= 0.1.
TimeSeries fdm_solve(const OscillatorParams& p, const Forcing& h, const TimeGrid& grid,
                     const FdmOptions& opts = {});

/// Homogeneous march with unit initial velocity: the FDM impulse response.
TimeSeries impulse_fdm(const OscillatorParams& p, const TimeGrid& grid,
                       FdmScheme scheme = FdmScheme::explicit_level);

}  // namespace fracosc
