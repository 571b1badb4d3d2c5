#pragma once

// Forced responses by convolution with an impulse-response kernel, and the
// canned comparison cases: four impulse cases and a harmonically forced one.

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fracosc/series.hpp"
#include "fracosc/types.hpp"

namespace fracosc {

/// Excitation h(t) in m/s^2.
class Excitation {
 public:
  enum class Kind { cosine, sine, constant, tabulated };

  static Excitation cosine(double amplitude, double frequency);
  static Excitation sine(double amplitude, double frequency);
  static Excitation constant(double amplitude);
  /// Linear interpolation of `table`; evaluating outside its span throws.
  static Excitation tabulated(TimeSeries table);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double amplitude() const noexcept { return amplitude_; }
  [[nodiscard]] double frequency() const noexcept { return frequency_; }
  [[nodiscard]] const std::optional<TimeSeries>& table() const noexcept { return table_; }

  [[nodiscard]] double operator()(double t) const;

  /// Throws DomainError unless h is defined on [0, t_end].
  void check_covers(double t_end) const;

 private:
  Excitation(Kind kind, double amplitude, double frequency, std::optional<TimeSeries> table);

  Kind kind_;
  double amplitude_;
  double frequency_;
  std::optional<TimeSeries> table_;
};

/// The impulse response used as a convolution kernel.
class ImpulseKernel {
 public:
  enum class Kind { series, approx, tabulated };

  static ImpulseKernel series(const OscillatorParams& p, ImpulseSeriesOptions opts = {});
  static ImpulseKernel approx(const OscillatorParams& p);
  /// Linear interpolation of sampled values; masked or uncovered points are
  /// invalid.
  static ImpulseKernel tabulated(TimeSeries values);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }

  /// Kernel values on `grid` with validity mask.
  [[nodiscard]] TimeSeries sample(const TimeGrid& grid, unsigned jobs = 1) const;

 private:
  ImpulseKernel(Kind kind, OscillatorParams p, ImpulseSeriesOptions opts,
                std::optional<TimeSeries> table);

  Kind kind_;
  OscillatorParams p_;
  ImpulseSeriesOptions opts_;
  std::optional<TimeSeries> table_;
};

/// Thrown by convolve when the kernel is invalid somewhere on the horizon.
class KernelInvalid : public std::runtime_error {
 public:
  KernelInvalid(const std::string& what, double valid_until)
      : std::runtime_error(what), valid_until_(valid_until) {}
  /// Last grid time at which the kernel was still valid.
  [[nodiscard]] double valid_until() const noexcept { return valid_until_; }

 private:
  double valid_until_;
};

/// x(t_i) = int_0^t_i h(t_i - s) I(s) ds by the trapezoid rule on the grid
/// (t0 must be 0). Throws KernelInvalid if any kernel sample is invalid.
TimeSeries convolve(const Excitation& h, const ImpulseKernel& kernel, const TimeGrid& grid,
                    unsigned jobs = 1);

/// As convolve, but samples that depend on an invalid kernel value are
/// masked instead of throwing.
TimeSeries convolve_masked(const Excitation& h, const ImpulseKernel& kernel, const TimeGrid& grid,
                           unsigned jobs = 1);

/// Same as convolve_masked with a precomputed kernel on the same grid.
TimeSeries convolve_sampled(const Excitation& h, const TimeSeries& kernel, unsigned jobs = 1);

/// I_beta - I~_beta on the grid, masked where the series is invalid.
TimeSeries residual_series_minus_approx(const OscillatorParams& p, const TimeGrid& grid,
                                        unsigned jobs = 1);

struct ComparisonReport {
  std::string case_id;
  OscillatorParams params;
  TimeSeries series;
  TimeSeries approx;
  std::optional<TimeSeries> fdm;
  /// max |series - approx| over the series-valid window.
  double residual_max = 0.0;
  /// residual_max / max |series|.
  double residual_rel = 0.0;
  /// max |series - fdm| / max |series| over the series-valid window.
  double fdm_residual_rel = 0.0;
  /// max |approx - fdm| over the whole horizon.
  double approx_fdm_residual_max = 0.0;
  /// Last grid time with a valid series value.
  double valid_until = 0.0;
};

struct CaseDefinition {
  std::string id;
  OscillatorParams params;
  /// Empty for impulse cases.
  std::optional<Excitation> excitation;
  double t_end;
  std::size_t n;
};

/// Ids "1".."4" for the impulse cases and "yuan" for the forced one.
/// Roman numerals "i".."iv" are accepted as aliases.
std::optional<CaseDefinition> find_case(const std::string& case_id);
std::vector<std::string> case_ids();

/// Largest FDM step relative to 1/omega_n used for impulse comparisons.
inline constexpr double kImpulseFdmStep = 1e-3;

/// Runs a case on its default grid, or on [0, t_end] with n points.
ComparisonReport run_case(const std::string& case_id, std::optional<double> t_end = std::nullopt,
                          std::optional<std::size_t> n = std::nullopt, unsigned jobs = 1);

/// Runs an arbitrary definition. Impulse definitions compare the three
/// impulse responses; forced ones compare the three convolutions, with the
/// FDM march done directly on the grid.
ComparisonReport run_comparison(const CaseDefinition& def, unsigned jobs = 1);

}  // namespace fracosc
