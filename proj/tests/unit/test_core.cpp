#include <cmath>

#include "doctest.h"
#include "fracosc/diagnostics.hpp"
#include "fracosc/types.hpp"
#include "property.hpp"

using namespace fracosc;

TEST_CASE("validate_params accepts the reference oscillators") {
  CHECK(validate_params({10.0, 0.05, 0.7}) == OscillatorParams{10.0, 0.05, 0.7});
  CHECK(validate_params({std::sqrt(2.0), 0.1214, 0.56}).beta == 0.56);
}

TEST_CASE("validate_params names the violated field") {
  CHECK_THROWS_WITH_AS(validate_params({0.0, 0.05, 0.5}), "omega_n must be > 0", DomainError);
  CHECK_THROWS_WITH_AS(validate_params({1.0, -0.1, 0.5}), doctest::Contains("zeta"), DomainError);
  CHECK_THROWS_WITH_AS(validate_params({1.0, 1.5, 0.5}), doctest::Contains("zeta"), DomainError);
  CHECK_THROWS_WITH_AS(validate_params({1.0, 0.1, 1.2}), doctest::Contains("beta"), DomainError);
  CHECK_THROWS_WITH_AS(validate_params({1.0, 0.1, -0.2}), doctest::Contains("beta"), DomainError);
  CHECK_THROWS_AS(validate_params({NAN, 0.1, 0.5}), DomainError);
  CHECK_THROWS_AS(validate_params({INFINITY, 0.1, 0.5}), DomainError);
}

TEST_CASE("validate_params is idempotent") {
  testing::for_all(1, 100, [](testing::Gen& g, int) {
    const OscillatorParams p = g.params();
    CHECK(validate_params(validate_params(p)) == p);
  });
}

TEST_CASE("extended zeta range is flagged, not rejected") {
  CHECK_FALSE(calibration_warning({1.0, 0.05, 0.5}).has_value());
  CHECK(calibration_warning({1.0, 0.5, 0.5}).has_value());
  CHECK(calibration_warning({1.0, 0.0, 0.5}).has_value());
  CHECK_NOTHROW(validate_params({1.0, 1.0, 0.5}));
}

TEST_CASE("damping coefficient") {
  CHECK(OscillatorParams{4.0, 0.1, 0.5}.damping_coefficient() == doctest::Approx(2 * 0.1 * 8.0));
}

TEST_CASE("linspace_grid examples") {
  const TimeGrid a = linspace_grid(1.0, 2);
  CHECK(a.t0() == 0.0);
  CHECK(a.dt() == 1.0);
  CHECK(a.size() == 2);

  const TimeGrid b = linspace_grid(5.0, 6);
  CHECK(b.dt() == 1.0);
  for (std::size_t i = 0; i < 6; ++i) CHECK(b.at(i) == static_cast<double>(i));

  const TimeGrid c = linspace_grid(22.0, 4401);
  CHECK(c.dt() == doctest::Approx(0.005).epsilon(1e-15));
  CHECK(std::abs(c.t_end() - 22.0) <= std::nextafter(22.0, 23.0) - 22.0);
}

TEST_CASE("linspace_grid rejects bad input") {
  CHECK_THROWS_AS(linspace_grid(0.0, 10), DomainError);
  CHECK_THROWS_AS(linspace_grid(-1.0, 10), DomainError);
  CHECK_THROWS_AS(linspace_grid(1.0, 1), DomainError);
  CHECK_THROWS_AS(TimeGrid(0.0, 0.0, 5), DomainError);
}

TEST_CASE("grid times are reconstructed by multiplication") {
  testing::for_all(2, 50, [](testing::Gen& g, int) {
    const double t0 = g.uniform(-1.0, 1.0);
    const double dt = g.uniform(1e-4, 1.0);
    const TimeGrid grid(t0, dt, 1000);
    const auto i = static_cast<std::size_t>(g.integer(0, 999));
    CHECK(grid.at(i) == t0 + static_cast<double>(i) * dt);
  });
}

TEST_CASE("refined grid covers the same span") {
  const TimeGrid g = linspace_grid(2.0, 21);
  const TimeGrid r = g.refined(4);
  CHECK(r.size() == 81);
  CHECK(r.t_end() == doctest::Approx(2.0));
  CHECK(r.dt() == doctest::Approx(0.025));
}

TEST_CASE("time series masks are excluded from norms") {
  const TimeGrid g = linspace_grid(3.0, 4);
  const TimeSeries a(g, {0.0, 1.0, -5.0, 2.0}, std::vector<std::uint8_t>{1, 1, 0, 1});
  const TimeSeries b(g, {0.0, 0.5, 100.0, 2.5});
  CHECK(max_abs(a) == 2.0);
  CHECK(a.first_invalid() == 2);
  CHECK_FALSE(a.all_valid());
  CHECK(max_abs_diff(a, b) == 0.5);
  const TimeSeries d = difference(a, b);
  CHECK_FALSE(d.is_valid(2));
  CHECK(d[1] == 0.5);
  CHECK(b.unit() == "m");
}

TEST_CASE("time series construction checks lengths and grids") {
  const TimeGrid g = linspace_grid(1.0, 3);
  CHECK_THROWS_AS(TimeSeries(g, {1.0, 2.0}), DomainError);
  CHECK_THROWS_AS(TimeSeries(g, {1.0, 2.0, 3.0}, std::vector<std::uint8_t>{1, 1}), DomainError);
  const TimeSeries a(g, {1.0, 2.0, 3.0});
  const TimeSeries b(linspace_grid(2.0, 3), {1.0, 2.0, 3.0});
  CHECK_THROWS_AS(max_abs_diff(a, b), DomainError);
}

TEST_CASE("decimate keeps every stride-th sample") {
  const TimeGrid g = linspace_grid(1.0, 11);
  std::vector<double> v(11);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<double>(i);
  const TimeSeries d = decimate(TimeSeries(g, v), 5);
  REQUIRE(d.size() == 3);
  CHECK(d[2] == 10.0);
  CHECK(d.grid().dt() == doctest::Approx(0.5));
}

TEST_CASE("warning handler can be replaced") {
  std::string seen;
  auto previous = set_warning_handler([&](std::string_view m) { seen = m; });
  warn("hello");
  set_warning_handler(previous);
  CHECK(seen == "hello");
}
