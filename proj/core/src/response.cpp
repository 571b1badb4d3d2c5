#include "fracosc/response.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fracosc/approx.hpp"
#include "fracosc/fdm.hpp"
#include "parallel.hpp"

namespace fracosc {

namespace {

// Linear interpolation in a sampled series. Returns nullopt outside the span
// or when a neighbouring sample is masked.
std::optional<double> interpolate(const TimeSeries& s, double t) {
  const TimeGrid& g = s.grid();
  const double u = (t - g.t0()) / g.dt();
  const double last = static_cast<double>(g.size() - 1);
  // Allow a few ulps of slack at both ends so grid-aligned queries succeed.
  const double slack = 1e-9;
  if (u < -slack || u > last + slack) return std::nullopt;
  const double uc = std::clamp(u, 0.0, last);
  auto i = static_cast<std::size_t>(std::floor(uc));
  if (i >= g.size() - 1) i = g.size() - 2;
  const double f = uc - static_cast<double>(i);
  if (f == 0.0) {
    if (!s.is_valid(i)) return std::nullopt;
    return s[i];
  }
  if (!s.is_valid(i) || !s.is_valid(i + 1)) return std::nullopt;
  return (1.0 - f) * s[i] + f * s[i + 1];
}

void check_zero_start(const TimeGrid& grid) {
  if (grid.t0() != 0.0) throw DomainError("convolution grid must start at t = 0");
}

}  // namespace

Excitation::Excitation(Kind kind, double amplitude, double frequency,
                       std::optional<TimeSeries> table)
    : kind_(kind), amplitude_(amplitude), frequency_(frequency), table_(std::move(table)) {
  if (!std::isfinite(amplitude_)) throw DomainError("excitation amplitude must be finite");
  if (!std::isfinite(frequency_)) throw DomainError("excitation frequency must be finite");
}

Excitation Excitation::cosine(double amplitude, double frequency) {
  return {Kind::cosine, amplitude, frequency, std::nullopt};
}
Excitation Excitation::sine(double amplitude, double frequency) {
  return {Kind::sine, amplitude, frequency, std::nullopt};
}
Excitation Excitation::constant(double amplitude) {
  return {Kind::constant, amplitude, 0.0, std::nullopt};
}
Excitation Excitation::tabulated(TimeSeries table) {
  if (!table.all_valid()) throw DomainError("tabulated excitation must not contain masked samples");
  return {Kind::tabulated, 1.0, 0.0, std::move(table)};
}

double Excitation::operator()(double t) const {
  switch (kind_) {
    case Kind::cosine:
      return amplitude_ * std::cos(frequency_ * t);
    case Kind::sine:
      return amplitude_ * std::sin(frequency_ * t);
    case Kind::constant:
      return amplitude_;
    case Kind::tabulated: {
      const auto v = interpolate(*table_, t);
      if (!v) throw DomainError("tabulated excitation evaluated outside its span");
      return *v;
    }
  }
  return 0.0;
}

void Excitation::check_covers(double t_end) const {
  if (kind_ != Kind::tabulated) return;
  const TimeGrid& g = table_->grid();
  if (g.t0() > 0.0 || g.t_end() < t_end * (1.0 - 1e-12))
    throw DomainError("tabulated excitation does not cover the solve horizon");
}

ImpulseKernel::ImpulseKernel(Kind kind, OscillatorParams p, ImpulseSeriesOptions opts,
                             std::optional<TimeSeries> table)
    : kind_(kind), p_(p), opts_(opts), table_(std::move(table)) {}

ImpulseKernel ImpulseKernel::series(const OscillatorParams& p, ImpulseSeriesOptions opts) {
  return {Kind::series, validate_params(p), opts, std::nullopt};
}
ImpulseKernel ImpulseKernel::approx(const OscillatorParams& p) {
  return {Kind::approx, validate_params(p), {}, std::nullopt};
}
ImpulseKernel ImpulseKernel::tabulated(TimeSeries values) {
  return {Kind::tabulated, {}, {}, std::move(values)};
}

TimeSeries ImpulseKernel::sample(const TimeGrid& grid, unsigned jobs) const {
  switch (kind_) {
    case Kind::series:
      return ImpulseSeries(p_, opts_, grid.t_end()).sample(grid, jobs);
    case Kind::approx:
      return impulse_approx(p_, grid);
    case Kind::tabulated: {
      std::vector<double> v(grid.size(), 0.0);
      std::vector<std::uint8_t> ok(grid.size(), 0);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        if (const auto x = interpolate(*table_, grid.at(i))) {
          v[i] = *x;
          ok[i] = 1;
        }
      }
      return TimeSeries(grid, std::move(v), std::move(ok));
    }
  }
  throw DomainError("unknown kernel kind");
}

TimeSeries convolve_sampled(const Excitation& h, const TimeSeries& kernel, unsigned jobs) {
  const TimeGrid& grid = kernel.grid();
  check_zero_start(grid);
  h.check_covers(grid.t_end());
  const std::size_t n = grid.size();
  const double dt = grid.dt();
  std::vector<double> hv(n);
  for (std::size_t i = 0; i < n; ++i) hv[i] = h(grid.at(i));

  // Output i needs kernel samples 0..i, so it is valid until the first
  // masked kernel sample.
  const std::size_t valid_end = kernel.first_invalid();
  const auto I = kernel.values();
  std::vector<double> x(n, 0.0);
  std::vector<std::uint8_t> ok(n, 0);
  detail::parallel_for(n, jobs, [&](std::size_t i) {
    if (i >= valid_end) return;
    ok[i] = 1;
    if (i == 0) return;
    double s = 0.5 * (hv[i] * I[0] + hv[0] * I[i]);
    for (std::size_t j = 1; j < i; ++j) s += hv[i - j] * I[j];
    x[i] = s * dt;
  });
  return TimeSeries(grid, std::move(x), std::move(ok));
}

TimeSeries convolve_masked(const Excitation& h, const ImpulseKernel& kernel, const TimeGrid& grid,
                           unsigned jobs) {
  check_zero_start(grid);
  return convolve_sampled(h, kernel.sample(grid, jobs), jobs);
}

TimeSeries convolve(const Excitation& h, const ImpulseKernel& kernel, const TimeGrid& grid,
                    unsigned jobs) {
  check_zero_start(grid);
  const TimeSeries k = kernel.sample(grid, jobs);
  const std::size_t bad = k.first_invalid();
  if (bad < k.size()) {
    const double valid_until = bad == 0 ? 0.0 : grid.at(bad - 1);
    std::ostringstream os;
    os << "impulse kernel is invalid from t = " << grid.at(bad) << " (valid until "
       << valid_until << ")";
    throw KernelInvalid(os.str(), valid_until);
  }
  return convolve_sampled(h, k, jobs);
}

TimeSeries residual_series_minus_approx(const OscillatorParams& p, const TimeGrid& grid,
                                        unsigned jobs) {
  const TimeSeries s = ImpulseSeries(p, {}, grid.t_end()).sample(grid, jobs);
  return difference(s, impulse_approx(p, grid));
}

std::vector<std::string> case_ids() { return {"1", "2", "3", "4", "yuan"}; }

std::optional<CaseDefinition> find_case(const std::string& id) {
  const auto impulse = [](std::string name, double w, double beta, double zeta) {
    return CaseDefinition{std::move(name), {w, zeta, beta}, std::nullopt, 25.0 / w, 2501};
  };
  if (id == "1" || id == "i") return impulse("1", 1.0, 0.1, 0.01);
  if (id == "2" || id == "ii") return impulse("2", 10.0, 0.9, 0.15);
  if (id == "3" || id == "iii") return impulse("3", 1.0, 0.5, 0.15);
  if (id == "4" || id == "iv") return impulse("4", 5.0, 0.5, 0.05);
  if (id == "yuan")
    return CaseDefinition{"yuan", {std::sqrt(2.0), 0.1214, 0.56}, Excitation::cosine(30.0, 6.0),
                          40.0, 8001};
  return std::nullopt;
}

ComparisonReport run_case(const std::string& case_id, std::optional<double> t_end,
                          std::optional<std::size_t> n, unsigned jobs) {
  auto def = find_case(case_id);
  if (!def) throw DomainError("unknown case id '" + case_id + "'");
  if (t_end) def->t_end = *t_end;
  if (n) def->n = *n;
  return run_comparison(*def, jobs);
}

ComparisonReport run_comparison(const CaseDefinition& def, unsigned jobs) {
  const OscillatorParams p = validate_params(def.params);
  const TimeGrid grid = linspace_grid(def.t_end, def.n);

  TimeSeries series = [&] {
    if (!def.excitation) return ImpulseSeries(p, {}, grid.t_end()).sample(grid, jobs);
    return convolve_masked(*def.excitation, ImpulseKernel::series(p), grid, jobs);
  }();
  TimeSeries approx = def.excitation
                          ? convolve(*def.excitation, ImpulseKernel::approx(p), grid, jobs)
                          : impulse_approx(p, grid);
  TimeSeries fdm = [&] {
    if (!def.excitation) {
      const auto stride = static_cast<std::size_t>(
          std::ceil(grid.dt() * p.omega_n / kImpulseFdmStep - 1e-9));
      return decimate(impulse_fdm(p, grid.refined(std::max<std::size_t>(stride, 1))),
                      std::max<std::size_t>(stride, 1));
    }
    const Excitation& h = *def.excitation;
    return fdm_solve(p, [&h](double t) { return h(t); }, grid);
  }();

  ComparisonReport r{def.id, p, std::move(series), std::move(approx), std::move(fdm)};
  const double peak = max_abs(r.series);
  r.residual_max = max_abs_diff(r.series, r.approx);
  r.residual_rel = peak > 0.0 ? r.residual_max / peak : 0.0;
  r.fdm_residual_rel = peak > 0.0 ? max_abs_diff(r.series, *r.fdm) / peak : 0.0;
  r.approx_fdm_residual_max = max_abs_diff(r.approx, *r.fdm);
  const std::size_t bad = r.series.first_invalid();
  r.valid_until = bad == 0 ? 0.0 : grid.at(bad - 1);
  return r;
}

}  // namespace fracosc
