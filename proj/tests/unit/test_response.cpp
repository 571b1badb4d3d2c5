#include <cmath>

#include "doctest.h"
#include "fixtures.hpp"
#include "fracosc/approx.hpp"
#include "fracosc/fdm.hpp"
#include "fracosc/response.hpp"
#include "property.hpp"

using namespace fracosc;

TEST_CASE("excitation kinds") {
  CHECK(Excitation::cosine(30.0, 6.0)(0.0) == 30.0);
  CHECK(Excitation::sine(2.0, 1.0)(std::numbers::pi / 2) == doctest::Approx(2.0));
  CHECK(Excitation::constant(3.0)(123.0) == 3.0);
  const Excitation tab = Excitation::tabulated(TimeSeries(linspace_grid(2.0, 3), {0.0, 2.0, 0.0}));
  CHECK(tab(0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)tab(2.5), DomainError);
  CHECK_THROWS_AS(tab.check_covers(3.0), DomainError);
  CHECK_NOTHROW(tab.check_covers(2.0));
  CHECK_THROWS_AS(Excitation::constant(NAN), DomainError);
}

TEST_CASE("zero excitation convolves to zero") {
  const TimeSeries x =
      convolve(Excitation::constant(0.0), ImpulseKernel::approx({1.0, 0.1, 0.5}), linspace_grid(10.0, 501));
  CHECK(max_abs(x) == 0.0);
  CHECK(x[0] == 0.0);
}

TEST_CASE("constant load settles at the static deflection") {
  const OscillatorParams p{2.0, 0.1, 1.0};
  const double t_end = 10.0 / (p.zeta * p.omega_n);
  const TimeGrid g = linspace_grid(t_end, 20001);
  const TimeSeries x = convolve(Excitation::constant(3.0), ImpulseKernel::tabulated(
      [&] {
        std::vector<double> v(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) v[i] = impulse_beta1(p, g.at(i));
        return TimeSeries(g, v);
      }()), g);
  CHECK(x[g.size() - 1] == doctest::Approx(3.0 / (p.omega_n * p.omega_n)).epsilon(1e-3));
}

TEST_CASE("convolution is linear") {
  testing::for_all(70, 10, [](testing::Gen& g, int) {
    const OscillatorParams p = g.params();
    const TimeGrid grid = linspace_grid(5.0, 801);
    const double a = g.uniform(-3, 3), b = g.uniform(-3, 3), w1 = g.uniform(0.5, 5), w2 = g.uniform(0.5, 5);
    const ImpulseKernel k = ImpulseKernel::approx(p);
    const TimeSeries x1 = convolve(Excitation::cosine(1.0, w1), k, grid);
    const TimeSeries x2 = convolve(Excitation::sine(1.0, w2), k, grid);
    std::vector<double> hv(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) hv[i] = a * std::cos(w1 * grid.at(i)) + b * std::sin(w2 * grid.at(i));
    const TimeSeries xs = convolve(Excitation::tabulated(TimeSeries(grid, hv)), k, grid);
    double scale = 0.0, err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
      scale = std::max(scale, std::abs(xs[i]));
      err = std::max(err, std::abs(xs[i] - (a * x1[i] + b * x2[i])));
    }
    CHECK(err <= 1e-12 * std::max(scale, 1e-300) + 1e-300);
  });
}

TEST_CASE("grid refinement changes the convolution by under 1%") {
  const OscillatorParams p{std::sqrt(2.0), 0.1214, 0.56};
  const Excitation h = Excitation::cosine(30.0, 6.0);
  const TimeSeries a = convolve(h, ImpulseKernel::approx(p), linspace_grid(20.0, 2001));
  const TimeSeries b = convolve(h, ImpulseKernel::approx(p), linspace_grid(20.0, 4001));
  CHECK(max_abs_diff(a, decimate(b, 2)) < 0.01 * max_abs(a));
}

TEST_CASE("series kernel invalidity is reported") {
  const OscillatorParams p{std::sqrt(2.0), 0.1214, 0.56};
  const TimeGrid g = linspace_grid(30.0, 3001);
  const Excitation h = Excitation::cosine(30.0, 6.0);
  try {
    (void)convolve(h, ImpulseKernel::series(p), g);
    FAIL("expected KernelInvalid");
  } catch (const KernelInvalid& e) {
    CHECK(e.valid_until() > 18.0);
    CHECK(e.valid_until() < 24.0);
  }
  const TimeSeries m = convolve_masked(h, ImpulseKernel::series(p), g);
  CHECK_FALSE(m.all_valid());
  CHECK(m.is_valid(0));
}

TEST_CASE("yuan forced response is a bounded oscillation at the drive frequency") {
  const OscillatorParams p{std::sqrt(2.0), 0.1214, 0.56};
  const TimeGrid g = linspace_grid(40.0, 8001);
  const TimeSeries x = convolve(Excitation::cosine(30.0, 6.0), ImpulseKernel::approx(p), g);
  // Zero crossings over the last 10 s: a 6 rad/s oscillation has 6 * 10 / pi of them.
  int crossings = 0;
  double amp = 0.0;
  for (std::size_t i = 6001; i < g.size(); ++i) {
    if ((x[i] > 0) != (x[i - 1] > 0)) ++crossings;
    amp = std::max(amp, std::abs(x[i]));
  }
  CHECK(std::abs(crossings - 60.0 / std::numbers::pi) <= 2.0);
  CHECK(amp < 2.0);
  CHECK(amp > 0.5);
}

TEST_CASE("residual_series_minus_approx examples") {
  const TimeGrid g = linspace_grid(5.0, 501);
  CHECK(max_abs(residual_series_minus_approx({2.0, 0.1, 0.0}, g)) < 1e-10);
  CHECK(max_abs(residual_series_minus_approx({2.0, 0.1, 1.0}, g)) < 1e-10);
  const OscillatorParams p{5.0, 0.05, 0.5};
  const TimeGrid g4 = linspace_grid(5.0, 1001);
  const TimeSeries r = residual_series_minus_approx(p, g4);
  CHECK(max_abs(r) < 0.1 * max_abs(ImpulseSeries(p).sample(g4)));
}

TEST_CASE("comparison cases hold their pinned residual thresholds") {
  const auto th = testing::load_thresholds(testing::fixture_path("residuals.txt"));
  for (const std::string id : {"1", "2", "3", "4"}) {
    const ComparisonReport r = run_case(id);
    INFO("case " << id);
    CHECK(r.residual_rel < 0.1);
    CHECK(r.residual_rel <= th.at("case" + id + ".residual_rel"));
    CHECK(r.fdm_residual_rel <= th.at("case" + id + ".fdm_residual_rel"));
    CHECK(r.residual_rel >= 0.0);
    // Triangle inequality across the three solutions.
    const double peak = max_abs(r.series);
    CHECK(r.fdm_residual_rel * peak <= r.residual_max + r.approx_fdm_residual_max + 1e-12);
  }
}

TEST_CASE("yuan case") {
  const auto th = testing::load_thresholds(testing::fixture_path("residuals.txt"));
  const ComparisonReport r = run_case("yuan");
  CHECK(r.valid_until == doctest::Approx(22.0).epsilon(0.1));
  REQUIRE(r.fdm.has_value());
  CHECK(r.fdm->all_valid());
  CHECK(r.approx.all_valid());
  CHECK(r.residual_rel <= th.at("yuan.residual_rel"));
  CHECK(r.fdm_residual_rel <= th.at("yuan.fdm_residual_rel"));
  CHECK(r.approx_fdm_residual_max <= 2.0 * r.residual_max);
}

TEST_CASE("case lookup") {
  CHECK(find_case("iv")->params == OscillatorParams{5.0, 0.05, 0.5});
  CHECK_FALSE(find_case("5").has_value());
  CHECK_THROWS_AS(run_case("nope"), DomainError);
  CHECK(case_ids().size() == 5);
}
