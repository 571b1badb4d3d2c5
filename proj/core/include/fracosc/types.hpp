#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace fracosc {

/// Raised when an argument violates a documented precondition. The message
/// names the offending field and the bound it broke.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Parameters of x'' + 2 zeta omega_n^(2-beta) D^beta x + omega_n^2 x = h(t),
/// with D^beta the Caputo derivative.
struct OscillatorParams {
  double omega_n = 1.0;  // rad/s
  double zeta = 0.0;
  double beta = 1.0;

  /// 2 zeta omega_n^(2-beta), the coefficient multiplying D^beta x.
  [[nodiscard]] double damping_coefficient() const;

  friend bool operator==(const OscillatorParams&, const OscillatorParams&) = default;
};

/// Range of zeta over which the closed-form equivalent parameters were fitted.
inline constexpr double kCalibratedZetaMin = 0.001;
inline constexpr double kCalibratedZetaMax = 0.15;

/// Returns `p` unchanged when omega_n > 0, 0 <= zeta <= 1, 0 <= beta <= 1 and
/// every field is finite; throws DomainError otherwise.
OscillatorParams validate_params(const OscillatorParams& p);

/// Non-empty when zeta lies outside the calibrated interval (the "extended
/// range"); the text is suitable for a warning line.
std::optional<std::string> calibration_warning(const OscillatorParams& p);

/// Uniform sampling t_i = t0 + i*dt, i = 0..n-1. Sample times are always
/// formed by multiplication so they never drift.
class TimeGrid {
 public:
  TimeGrid(double t0, double dt, std::size_t n);

  [[nodiscard]] double t0() const noexcept { return t0_; }
  [[nodiscard]] double dt() const noexcept { return dt_; }
  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] double at(std::size_t i) const noexcept {
    return t0_ + static_cast<double>(i) * dt_;
  }
  [[nodiscard]] double t_end() const noexcept { return at(n_ - 1); }

  /// Grid with the same start and dt / factor spacing covering the same span.
  [[nodiscard]] TimeGrid refined(std::size_t factor) const;

  friend bool operator==(const TimeGrid&, const TimeGrid&) = default;

 private:
  double t0_;
  double dt_;
  std::size_t n_;
};

/// t0 = 0, dt = t_end / (n - 1).
TimeGrid linspace_grid(double t_end, std::size_t n);

/// A sampled signal on a TimeGrid. Samples whose validity flag is cleared
/// were produced by an evaluation that was declared unreliable; they are
/// skipped by every norm below.
class TimeSeries {
 public:
  TimeSeries(TimeGrid grid, std::vector<double> values, std::string unit = "m");
  TimeSeries(TimeGrid grid, std::vector<double> values, std::vector<std::uint8_t> valid,
             std::string unit = "m");

  [[nodiscard]] const TimeGrid& grid() const noexcept { return grid_; }
  [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
  [[nodiscard]] std::span<const std::uint8_t> valid() const noexcept { return valid_; }
  [[nodiscard]] const std::string& unit() const noexcept { return unit_; }
  [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
  [[nodiscard]] double operator[](std::size_t i) const noexcept { return values_[i]; }
  [[nodiscard]] bool is_valid(std::size_t i) const noexcept { return valid_[i] != 0; }

  /// Index of the first masked sample, or size() when every sample is valid.
  [[nodiscard]] std::size_t first_invalid() const noexcept;
  [[nodiscard]] bool all_valid() const noexcept { return first_invalid() == size(); }

 private:
  TimeGrid grid_;
  std::vector<double> values_;
  std::vector<std::uint8_t> valid_;
  std::string unit_;
};

/// max |x_i| over valid samples (0 if none are valid).
double max_abs(const TimeSeries& x);

/// max |a_i - b_i| over samples valid in both; grids must match.
double max_abs_diff(const TimeSeries& a, const TimeSeries& b);

/// Pointwise a - b with the intersection of both masks.
TimeSeries difference(const TimeSeries& a, const TimeSeries& b);

/// Keeps every `stride`-th sample, starting at 0.
TimeSeries decimate(const TimeSeries& x, std::size_t stride);

}  // namespace fracosc
