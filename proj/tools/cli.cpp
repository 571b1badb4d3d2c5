#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "fracosc/fracosc.hpp"
#include "manifest.hpp"

namespace fracosc::cli {
namespace {

namespace fs = std::filesystem;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FRACOSC_SEED")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string(env).size()) return v;
    } catch (const std::exception&) {
    }
    warn(std::string("ignoring unparsable FRACOSC_SEED='") + env + "'");
  }
  return kDefaultSeed;
}

struct Common {
  fs::path out = ".";
  unsigned jobs = 1;
  bool dat = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Output directory")->capture_default_str();
  cmd->add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_flag("--dat", c.dat, "Also write gnuplot-style .dat files");
}

void add_params(CLI::App* cmd, OscillatorParams& p) {
  cmd->add_option("--omega-n", p.omega_n, "Natural frequency, rad/s")->capture_default_str();
  cmd->add_option("--zeta", p.zeta, "Damping ratio")->capture_default_str();
  cmd->add_option("--beta", p.beta, "Fractional order in [0, 1]")->capture_default_str();
}

void emit(const Common& c, RunManifest& m, const std::string& name, const CsvTable& table) {
  fs::create_directories(c.out);
  const fs::path csv = c.out / (name + ".csv");
  write_csv(csv, table);
  m.add_output(csv);
  if (c.dat) {
    const fs::path dat = c.out / (name + ".dat");
    write_dat(dat, table);
    m.add_output(dat);
  }
}

nlohmann::ordered_json params_json(const OscillatorParams& p) {
  return {{"omega_n", p.omega_n}, {"zeta", p.zeta}, {"beta", p.beta}};
}

std::string flag(bool v) { return v ? "1" : "0"; }

// ---------------------------------------------------------------- impulse

struct ImpulseArgs {
  OscillatorParams p{1.0, 0.05, 0.5};
  double t_end = 10.0;
  std::size_t n = 1001;
  std::string method = "series";
  bool naive = false;
  bool fallback = false;
  double fdm_step = kImpulseFdmStep;
  Common common;
};

TimeSeries impulse_by_fdm(const OscillatorParams& p, const TimeGrid& grid, double step) {
  const auto stride =
      std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(grid.dt() * p.omega_n / step - 1e-9)));
  return decimate(impulse_fdm(p, grid.refined(stride)), stride);
}

int cmd_impulse(const ImpulseArgs& a) {
  const OscillatorParams p = validate_params(a.p);
  if (const auto w = calibration_warning(p)) warn(*w);
  const TimeGrid grid = linspace_grid(a.t_end, a.n);
  RunManifest m("impulse");
  m.params() = params_json(p);
  m.params()["t_end"] = a.t_end;
  m.params()["n"] = a.n;
  m.params()["method"] = a.method;
  m.params()["naive"] = a.naive;

  const bool want_series = a.method == "series" || a.method == "all";
  const bool want_approx = a.method == "approx" || a.method == "all";
  const bool want_fdm = a.method == "fdm" || a.method == "all";

  const auto single = [&](const std::string& name, const TimeSeries& x) {
    CsvTable t{{"t", "x", "valid"}, {}};
    for (std::size_t i = 0; i < x.size(); ++i)
      t.add_row({format_number(grid.at(i)), format_number(x[i]), flag(x.is_valid(i))});
    emit(a.common, m, "impulse_" + name, t);
  };

  std::optional<TimeSeries> series, approx, fdm;
  bool series_broken = false;
  if (want_series) {
    ImpulseSeriesOptions opts;
    opts.mode = a.naive ? SeriesMode::naive : SeriesMode::stable;
    series = ImpulseSeries(p, opts, a.t_end).sample(grid, a.common.jobs);
    single("series", *series);
    const std::size_t bad = series->first_invalid();
    if (bad < series->size()) {
      series_broken = true;
      std::cerr << (a.naive ? "naive" : "stable") << " series evaluation blows up near t = "
                << grid.at(bad) << " s (first invalid sample)\n";
      m.metrics()["series_valid_until"] = bad == 0 ? 0.0 : grid.at(bad - 1);
    } else {
      m.metrics()["series_valid_until"] = grid.t_end();
    }
  }
  if (want_approx) {
    approx = impulse_approx(p, grid);
    single("approx", *approx);
  }
  if (want_fdm) {
    fdm = impulse_by_fdm(p, grid, a.fdm_step);
    single("fdm", *fdm);
  }
  if (a.method == "all") {
    CsvTable t{{"t", "series", "approx", "fdm", "residual", "residual_fdm", "valid"}, {}};
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const bool ok = series->is_valid(i);
      const double nan = std::nan("");
      t.add_row({format_number(grid.at(i)), format_number((*series)[i]),
                 format_number((*approx)[i]), format_number((*fdm)[i]),
                 format_number(ok ? (*series)[i] - (*approx)[i] : nan),
                 format_number(ok ? (*series)[i] - (*fdm)[i] : nan), flag(ok)});
    }
    emit(a.common, m, "impulse_all", t);
    const double peak = max_abs(*series);
    m.metrics()["residual_rel"] = peak > 0 ? max_abs_diff(*series, *approx) / peak : 0.0;
    m.metrics()["fdm_residual_rel"] = peak > 0 ? max_abs_diff(*series, *fdm) / peak : 0.0;
  }
  if (series_broken && a.method == "series" && !a.fallback) return kNumericInvalid;
  m.write(a.common.out);
  return kOk;
}

// -------------------------------------------------------------------- frf

struct FrfArgs {
  OscillatorParams p{1.0, 0.05, 0.5};
  double g_max = 3.0;
  std::size_t n = 301;
  Common common;
};

int cmd_frf(const FrfArgs& a) {
  const OscillatorParams p = validate_params(a.p);
  if (const auto w = calibration_warning(p)) warn(*w);
  const FrfCurve ex = frf_curve(p, FrfKind::exact, a.g_max, a.n);
  const FrfCurve ap = frf_curve(p, FrfKind::approx, a.g_max, a.n);
  RunManifest m("frf");
  m.params() = params_json(p);
  m.params()["g_max"] = a.g_max;
  m.params()["n"] = a.n;
  CsvTable t{{"g", "mag_exact", "mag_approx"}, {}};
  for (std::size_t i = 0; i < a.n; ++i)
    t.add_row({format_number(ex.g[i]), format_number(ex.mag[i]), format_number(ap.mag[i])});
  emit(a.common, m, "frf", t);
  m.metrics()["relative_gap"] = frf_relative_gap(ex, ap);
  m.write(a.common.out);
  return kOk;
}

// -------------------------------------------------------------------- fit

struct FitArgs {
  std::string target = "omega-d";
  std::size_t samples = 10000;
  std::uint64_t seed = kDefaultSeed;
  Common common;
};

/// Fraction of failed samples above which `fit` exits with kPartialFailure.
constexpr double kFailureBudget = 0.01;

int cmd_fit(const FitArgs& a) {
  const FitTarget target = a.target == "omega-d" ? FitTarget::omega_d : FitTarget::zeta_eq;
  const CalibrationRun run = generate_calibration_samples(target, a.samples, a.seed, a.common.jobs);
  RunManifest m("fit");
  m.set_seed(a.seed);
  m.params()["target"] = a.target;
  m.params()["samples"] = a.samples;

  CsvTable scatter{{"beta", "y"}, {}};
  for (const auto& s : run.samples) scatter.add_row({format_number(s.beta), format_number(s.y)});
  const std::string stem = a.target == "omega-d" ? "omega_d" : "zeta_eq";
  emit(a.common, m, "scatter_" + stem, scatter);

  for (const auto& f : run.failures)
    std::cerr << "sample " << f.index << " (omega_n=" << f.params.omega_n
              << ", zeta=" << f.params.zeta << ", beta=" << f.params.beta
              << ") failed: " << f.reason << "\n";
  if (run.failure_fraction() > kFailureBudget) {
    std::cerr << run.failures.size() << " of " << run.requested
              << " samples failed, above the 1% budget\n";
    return kPartialFailure;
  }

  const RegressionFit fit = fit_power_law(run.samples);
  if (fit.underpowered())
    warn("fit uses " + std::to_string(fit.n_samples) +
         " samples (< 100); confidence intervals are wide");
  CsvTable t{{"a0", "a1", "a0_lo", "a0_hi", "a1_lo", "a1_hi", "rmse", "n"}, {}};
  t.add_row({format_number(fit.a0), format_number(fit.a1), format_number(fit.ci95_a0.first),
             format_number(fit.ci95_a0.second), format_number(fit.ci95_a1.first),
             format_number(fit.ci95_a1.second), format_number(fit.rmse),
             std::to_string(fit.n_samples)});
  emit(a.common, m, "fit_" + stem, t);
  m.metrics()["a0"] = fit.a0;
  m.metrics()["a1"] = fit.a1;
  m.metrics()["rmse"] = fit.rmse;
  m.metrics()["failures"] = run.failures.size();
  std::cout << "a0 = " << fit.a0 << " [" << fit.ci95_a0.first << ", " << fit.ci95_a0.second
            << "], a1 = " << fit.a1 << " [" << fit.ci95_a1.first << ", " << fit.ci95_a1.second
            << "], rmse = " << fit.rmse << ", n = " << fit.n_samples << "\n";
  m.write(a.common.out);
  return kOk;
}

// ---------------------------------------------------------------- respond

struct RespondArgs {
  std::string case_id;
  fs::path scenario;
  std::optional<double> t_end;
  std::optional<std::size_t> n;
  Common common;
};

int cmd_respond(const RespondArgs& a) {
  if (a.case_id.empty() == a.scenario.empty()) {
    std::cerr << "error: give exactly one of --case or --scenario\n";
    return kUsage;
  }
  CaseDefinition def;
  if (!a.scenario.empty()) {
    try {
      def = to_case(load_scenario(a.scenario));
    } catch (const ScenarioError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kUsage;
    }
  } else {
    auto found = find_case(a.case_id);
    if (!found) {
      std::cerr << "error: unknown case '" << a.case_id << "' (expected 1, 2, 3, 4 or yuan)\n";
      return kUsage;
    }
    def = *found;
  }
  if (a.t_end) def.t_end = *a.t_end;
  if (a.n) def.n = *a.n;
  if (const auto w = calibration_warning(def.params)) warn(*w);

  std::optional<ComparisonReport> report;
  try {
    report = run_comparison(def, a.common.jobs);
  } catch (const FdmInstability& e) {
    std::cerr << "error: no reference solution on the horizon: " << e.what() << "\n";
    return kNumericInvalid;
  }
  const ComparisonReport& r = *report;

  RunManifest m("respond");
  m.params() = params_json(def.params);
  m.params()["case"] = def.id;
  m.params()["t_end"] = def.t_end;
  m.params()["n"] = def.n;
  CsvTable t{{"t", "series", "approx", "fdm", "residual", "valid"}, {}};
  const TimeGrid& g = r.series.grid();
  for (std::size_t i = 0; i < g.size(); ++i) {
    const bool ok = r.series.is_valid(i);
    t.add_row({format_number(g.at(i)), format_number(r.series[i]), format_number(r.approx[i]),
               format_number((*r.fdm)[i]),
               format_number(ok ? r.series[i] - r.approx[i] : std::nan("")), flag(ok)});
  }
  emit(a.common, m, "report_" + def.id, t);
  m.metrics()["residual_max"] = r.residual_max;
  m.metrics()["residual_rel"] = r.residual_rel;
  m.metrics()["fdm_residual_rel"] = r.fdm_residual_rel;
  m.metrics()["approx_fdm_residual_max"] = r.approx_fdm_residual_max;
  m.metrics()["valid_until"] = r.valid_until;
  std::cout << "case " << def.id << ": series valid until " << r.valid_until
            << " s, residual_rel = " << r.residual_rel
            << ", max|approx - fdm| = " << r.approx_fdm_residual_max << "\n";
  m.write(a.common.out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args) {
  CLI::App app{"Fractionally damped oscillator: impulse responses, FRFs, regressions"};
  app.require_subcommand(1);

  ImpulseArgs imp;
  auto* c_imp = app.add_subcommand("impulse", "Impulse response by series, approximation or FDM");
  add_params(c_imp, imp.p);
  c_imp->add_option("--t-end", imp.t_end, "Horizon, s")->capture_default_str();
  c_imp->add_option("--n", imp.n, "Number of samples")->capture_default_str();
  c_imp->add_option("--method", imp.method, "series | approx | fdm | all")
      ->check(CLI::IsMember({"series", "approx", "fdm", "all"}))
      ->capture_default_str();
  c_imp->add_flag("--naive", imp.naive, "Evaluate the series directly in double precision");
  c_imp->add_flag("--fallback", imp.fallback, "Exit 0 even when the series loses validity");
  c_imp->add_option("--fdm-step", imp.fdm_step, "FDM step as omega_n * dt")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_common(c_imp, imp.common);

  FrfArgs frf;
  auto* c_frf = app.add_subcommand("frf", "Exact and approximate frequency-response magnitudes");
  add_params(c_frf, frf.p);
  c_frf->add_option("--g-max", frf.g_max, "Largest omega / omega_n")->capture_default_str();
  c_frf->add_option("--n", frf.n, "Number of g samples")->capture_default_str();
  add_common(c_frf, frf.common);

  FitArgs fit;
  fit.seed = default_seed();
  auto* c_fit = app.add_subcommand("fit", "Refit the equivalent-parameter power laws");
  c_fit->add_option("--target", fit.target, "omega-d | zeta-eq")
      ->check(CLI::IsMember({"omega-d", "zeta-eq"}))
      ->capture_default_str();
  c_fit->add_option("--samples", fit.samples, "Number of random draws")
      ->check(CLI::Range(std::size_t{3}, std::size_t{100000000}))
      ->capture_default_str();
  c_fit->add_option("--seed", fit.seed, "RNG seed (default: FRACOSC_SEED or 20240001)")
      ->capture_default_str();
  add_common(c_fit, fit.common);

  RespondArgs resp;
  auto* c_resp = app.add_subcommand("respond", "Series / approximation / FDM comparison");
  auto* o_case = c_resp->add_option("--case", resp.case_id, "1 | 2 | 3 | 4 | yuan");
  auto* o_scn = c_resp->add_option("--scenario", resp.scenario, "key=value scenario file");
  o_case->excludes(o_scn);
  c_resp->add_option("--t-end", resp.t_end, "Override the horizon, s");
  c_resp->add_option("--n", resp.n, "Override the number of samples");
  add_common(c_resp, resp.common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*c_imp) return cmd_impulse(imp);
    if (*c_frf) return cmd_frf(frf);
    if (*c_fit) return cmd_fit(fit);
    if (*c_resp) return cmd_respond(resp);
  } catch (const DomainError& e) {
    std::cerr << "error: invalid parameter: " << e.what() << "\n";
    return kUsage;
  } catch (const FdmInstability& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericInvalid;
  } catch (const RootNotConverged& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericInvalid;
  } catch (const FitError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNumericInvalid;
  }
  return kUsage;
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args);
}

}  // namespace fracosc::cli
