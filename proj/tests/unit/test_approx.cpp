#include <cmath>
#include <complex>
#include <numbers>

#include "doctest.h"
#include "fracosc/approx.hpp"
#include "fracosc/equiv.hpp"
#include "fracosc/series.hpp"
#include "property.hpp"

using namespace fracosc;

TEST_CASE("impulse_approx reproduces the closed forms at the integer orders") {
  testing::for_all(50, 30, [](testing::Gen& g, int) {
    OscillatorParams p = g.params();
    const double t = g.uniform(0.0, 20.0) / p.omega_n;
    p.beta = 0.0;
    CHECK(impulse_approx(p, t) == doctest::Approx(impulse_beta0(p, t)).epsilon(1e-14));
    p.beta = 1.0;
    CHECK(impulse_approx(p, t) == doctest::Approx(impulse_beta1(p, t)).epsilon(1e-14));
  });
}

TEST_CASE("impulse_approx chained example") {
  const OscillatorParams p{5.0, 0.05, 0.5};
  const double wd = 5.0 * 1.03586, z = 0.034749;
  CHECK(impulse_approx(p, 1.0) ==
        doctest::Approx(std::exp(-5.0 * z) * std::sin(wd) / wd).epsilon(1e-4));
  CHECK(std::abs(impulse_approx(p, 1.0) - impulse_series(p, 1.0).value) < 0.1 / wd);
}

TEST_CASE("impulse_approx stays inside its envelope") {
  testing::for_all(51, 200, [](testing::Gen& g, int) {
    const OscillatorParams p = g.params();
    const double t = g.uniform(0.0, 50.0) / p.omega_n;
    CHECK(std::abs(impulse_approx(p, t)) <=
          std::exp(-zeta_eq(p) * p.omega_n * t) / omega_d_eq(p) * (1 + 1e-14));
  });
}

TEST_CASE("frf_exact examples") {
  CHECK(frf_exact({1.0, 0.3, 0.56}, 0.0).h == std::complex<double>(1.0, 0.0));
  CHECK(std::abs(frf_exact({1.0, 0.15, 0.0}, 0.0).h - 1.0 / 1.3) < 1e-15);
  const FrfValue r = frf_exact({1.0, 0.05, 1.0}, 1.0);
  CHECK(std::abs(r.h) == doctest::Approx(10.0));
  CHECK(std::abs(r.h - 1.0 / std::complex<double>(0.0, 0.1)) < 1e-12);
}

TEST_CASE("frf poles are flagged") {
  const FrfValue a = frf_exact({1.0, 0.0, 0.5}, 1.0);
  CHECK(a.pole);
  CHECK(std::isinf(a.h.real()));
  CHECK(frf_approx({1.0, 0.15, 0.0}, std::sqrt(1.3)).pole);
  CHECK_FALSE(frf_approx({1.0, 0.15, 0.3}, std::sqrt(1.3)).pole);
  CHECK_THROWS_AS(frf_exact({1.0, 0.1, 0.5}, -0.5), DomainError);
}

TEST_CASE("frf_approx examples") {
  testing::for_all(52, 50, [](testing::Gen& g, int) {
    const OscillatorParams p = g.params_with_beta(1.0);
    const double gg = g.uniform(0.0, 3.0);
    CHECK(std::abs(frf_approx(p, gg).h - frf_exact(p, gg).h) <= 1e-10 * std::abs(frf_exact(p, gg).h));
  });
  CHECK(std::abs(frf_approx({1.0, 0.1, 1.0}, 0.0).h - 1.0) < 1e-15);
  const OscillatorParams y{std::sqrt(2.0), 0.1214, 0.56};
  const double r = omega_d_eq(y) / y.omega_n;
  const double ze = zeta_eq(y);
  const double static_gain = 1.0 / (r * r + ze * ze);
  CHECK(frf_approx(y, 0.0).h.real() == doctest::Approx(static_gain));
  CHECK(std::abs(static_gain - 1.0) > 0.05);  // the documented static-response gap
}

TEST_CASE("frf_curve samples and masks") {
  const FrfCurve c = frf_curve({1.0, 0.05, 1.0}, FrfKind::exact, 3.0, 30001);
  std::size_t imax = 0;
  for (std::size_t i = 0; i < c.g.size(); ++i) {
    CHECK(c.mag[i] >= 0.0);
    CHECK(c.phase[i] > -std::numbers::pi);
    CHECK(c.phase[i] <= std::numbers::pi);
    if (c.mag[i] > c.mag[imax]) imax = i;
    if (i) CHECK(c.g[i] > c.g[i - 1]);
  }
  CHECK(c.g[imax] == doctest::Approx(std::sqrt(1 - 2 * 0.05 * 0.05)).epsilon(1e-4));
  CHECK(c.mag[imax] == doctest::Approx(1 / (2 * 0.05 * std::sqrt(1 - 0.05 * 0.05))).epsilon(1e-6));

  const double gp = std::sqrt(1.3);
  const FrfCurve pole = frf_curve({1.0, 0.15, 0.0}, FrfKind::exact, 2 * gp, 3);
  CHECK(pole.valid[1] == 0);
  CHECK(pole.valid[0] == 1);
  CHECK_THROWS_AS(frf_curve({1.0, 0.1, 0.5}, FrfKind::exact, 0.0, 10), DomainError);
  CHECK_THROWS_AS(frf_curve({1.0, 0.1, 0.5}, FrfKind::exact, 1.0, 1), DomainError);
}

TEST_CASE("exact and approximate FRFs are close for the four comparison cases") {
  const OscillatorParams cases[] = {{1.0, 0.01, 0.1}, {10.0, 0.15, 0.9}, {1.0, 0.15, 0.5}, {5.0, 0.05, 0.5}};
  for (const auto& p : cases) {
    const double gap = frf_relative_gap(frf_curve(p, FrfKind::exact, 3.0, 3001),
                                        frf_curve(p, FrfKind::approx, 3.0, 3001));
    INFO(testing::describe(p));
    CHECK(gap < 0.15);
  }
}

TEST_CASE("Fourier transform of the approximate impulse equals frf_approx") {
  // omega_n^2 int_0^T I~(tau) exp(-i g omega_n tau) dtau, T = 10 decay constants.
  for (const OscillatorParams& p : {OscillatorParams{1.0, 0.1, 0.5}, OscillatorParams{4.0, 0.05, 0.8}}) {
    const double decay = zeta_eq(p) * p.omega_n;
    const double T = 10.0 / decay;
    const std::size_t n = 400001;
    const double dt = T / static_cast<double>(n - 1);
    for (double g : {0.5, 1.0, 2.0}) {
      const double w = g * p.omega_n;
      std::complex<double> acc = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) * dt;
        const double wgt = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        acc += wgt * impulse_approx(p, t) * std::polar(1.0, -w * t);
      }
      const std::complex<double> h = acc * dt * p.omega_n * p.omega_n;
      const std::complex<double> ref = frf_approx(p, g).h;
      INFO(testing::describe(p) << " g=" << g);
      CHECK(std::abs(h - ref) <= 1e-3 * std::abs(ref));
    }
  }
}

TEST_CASE("resonance of the approximate FRF lies in the bracket") {
  testing::for_all(53, 30, [](testing::Gen& g, int) {
    const OscillatorParams p = g.params();
    const FrfCurve c = frf_curve(p, FrfKind::approx, 2.0, 20001);
    std::size_t imax = 0;
    for (std::size_t i = 0; i < c.g.size(); ++i)
      if (c.mag[i] > c.mag[imax]) imax = i;
    INFO(testing::describe(p));
    CHECK(c.g[imax] >= std::sqrt(1 - p.zeta * p.zeta) * 0.98);
    CHECK(c.g[imax] <= std::sqrt(1 + 2 * p.zeta) * 1.02);
  });
}
