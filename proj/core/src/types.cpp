#include "fracosc/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fracosc {

double OscillatorParams::damping_coefficient() const {
  return 2.0 * zeta * std::pow(omega_n, 2.0 - beta);
}

OscillatorParams validate_params(const OscillatorParams& p) {
  auto fail = [](const char* what) { throw DomainError(what); };
  if (!std::isfinite(p.omega_n)) fail("omega_n must be finite");
  if (!std::isfinite(p.zeta)) fail("zeta must be finite");
  if (!std::isfinite(p.beta)) fail("beta must be finite");
  if (!(p.omega_n > 0.0)) fail("omega_n must be > 0");
  if (p.zeta < 0.0) fail("zeta must be >= 0");
  if (p.zeta > 1.0) fail("zeta must be <= 1");
  if (p.beta < 0.0) fail("beta must be >= 0");
  if (p.beta > 1.0) fail("beta must be <= 1");
  return p;
}

std::optional<std::string> calibration_warning(const OscillatorParams& p) {
  if (p.zeta >= kCalibratedZetaMin && p.zeta <= kCalibratedZetaMax) return std::nullopt;
  std::ostringstream os;
  os << "zeta=" << p.zeta << " is outside the calibrated range [" << kCalibratedZetaMin << ", "
     << kCalibratedZetaMax << "] of the equivalent-parameter fits (extended range)";
  return os.str();
}

TimeGrid::TimeGrid(double t0, double dt, std::size_t n) : t0_(t0), dt_(dt), n_(n) {
  if (!std::isfinite(t0)) throw DomainError("t0 must be finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw DomainError("dt must be > 0");
  if (n < 2) throw DomainError("n must be >= 2");
}

TimeGrid TimeGrid::refined(std::size_t factor) const {
  if (factor == 0) throw DomainError("refinement factor must be >= 1");
  return TimeGrid(t0_, dt_ / static_cast<double>(factor), (n_ - 1) * factor + 1);
}

TimeGrid linspace_grid(double t_end, std::size_t n) {
  if (!(t_end > 0.0) || !std::isfinite(t_end)) throw DomainError("t_end must be > 0");
  if (n < 2) throw DomainError("n must be >= 2");
  return TimeGrid(0.0, t_end / static_cast<double>(n - 1), n);
}

TimeSeries::TimeSeries(TimeGrid grid, std::vector<double> values, std::string unit)
    : TimeSeries(grid, std::move(values), std::vector<std::uint8_t>(grid.size(), 1),
                 std::move(unit)) {}

TimeSeries::TimeSeries(TimeGrid grid, std::vector<double> values,
                       std::vector<std::uint8_t> valid, std::string unit)
    : grid_(grid), values_(std::move(values)), valid_(std::move(valid)), unit_(std::move(unit)) {
  if (values_.size() != grid_.size())
    throw DomainError("TimeSeries: values.size() must equal grid.n");
  if (valid_.size() != grid_.size())
    throw DomainError("TimeSeries: validity mask size must equal grid.n");
}

std::size_t TimeSeries::first_invalid() const noexcept {
  auto it = std::find(valid_.begin(), valid_.end(), std::uint8_t{0});
  return static_cast<std::size_t>(it - valid_.begin());
}

double max_abs(const TimeSeries& x) {
  double m = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x.is_valid(i)) m = std::max(m, std::abs(x[i]));
  return m;
}

namespace {
void require_same_grid(const TimeSeries& a, const TimeSeries& b) {
  if (!(a.grid() == b.grid())) throw DomainError("time series are sampled on different grids");
}
}  // namespace

double max_abs_diff(const TimeSeries& a, const TimeSeries& b) {
  require_same_grid(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.is_valid(i) && b.is_valid(i)) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

TimeSeries difference(const TimeSeries& a, const TimeSeries& b) {
  require_same_grid(a, b);
  std::vector<double> v(a.size());
  std::vector<std::uint8_t> ok(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    ok[i] = a.is_valid(i) && b.is_valid(i);
    v[i] = a[i] - b[i];
  }
  return TimeSeries(a.grid(), std::move(v), std::move(ok), a.unit());
}

TimeSeries decimate(const TimeSeries& x, std::size_t stride) {
  if (stride == 0) throw DomainError("stride must be >= 1");
  const std::size_t n = (x.size() - 1) / stride + 1;
  if (n < 2) throw DomainError("decimation leaves fewer than 2 samples");
  std::vector<double> v(n);
  std::vector<std::uint8_t> ok(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = x[i * stride];
    ok[i] = x.valid()[i * stride];
  }
  TimeGrid g(x.grid().t0(), x.grid().dt() * static_cast<double>(stride), n);
  return TimeSeries(g, std::move(v), std::move(ok), x.unit());
}

}  // namespace fracosc
