#include "fracosc/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "fracosc/types.hpp"

namespace fracosc {
namespace {

__extension__ using u128 = unsigned __int128;

constexpr int kMaxTabulatedInteger = 31;  // Gamma(31) = 30!

// ln(k!) for k = 0..30 from the exact integer value.
const std::array<long double, kMaxTabulatedInteger>& log_factorials() {
  static const auto table = [] {
    std::array<long double, kMaxTabulatedInteger> t{};
    u128 f = 1;
    for (int k = 0; k < kMaxTabulatedInteger; ++k) {
      if (k > 0) f *= static_cast<u128>(k);
      t[k] = std::log(static_cast<long double>(f));
    }
    return t;
  }();
  return table;
}

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<long double, 10> kStirling = {
    1.0L / 12.0L,          -1.0L / 360.0L,    1.0L / 1260.0L,        -1.0L / 1680.0L,
    1.0L / 1188.0L,        -691.0L / 360360.0L, 1.0L / 156.0L,       -3617.0L / 122400.0L,
    43867.0L / 244188.0L,  -174611.0L / 125400.0L};

constexpr long double kStirlingThreshold = 20.0L;

long double stirling(long double x) {
  const long double inv = 1.0L / x;
  const long double inv2 = inv * inv;
  long double series = 0.0L;
  for (auto it = kStirling.rbegin(); it != kStirling.rend(); ++it) series = series * inv2 + *it;
  series *= inv;
  constexpr long double half_log_2pi = 0.918938533204672741780329736405617639861L;
  return (x - 0.5L) * std::log(x) - x + half_log_2pi + series;
}

long double log_gamma_impl(long double x) {
  if (!(x > 0.0L)) throw DomainError("log_gamma: x must be > 0");
  if (std::isinf(x)) return x;
  if (x <= kMaxTabulatedInteger && x == std::floor(x))
    return log_factorials()[static_cast<int>(x) - 1];
  if (x >= kStirlingThreshold) return stirling(x);
  long double prod = 1.0L;
  long double y = x;
  while (y < kStirlingThreshold) {
    prod *= y;
    y += 1.0L;
  }
  return stirling(y) - std::log(prod);
}

// Exact C(n, k) when it fits in 64 bits.
bool exact_binomial(std::uint32_t n, std::uint32_t k, std::uint64_t& out) {
  u128 c = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    c = c * (n - i) / (i + 1);
    if (c > static_cast<u128>(UINT64_MAX)) return false;
  }
  out = static_cast<std::uint64_t>(c);
  return true;
}

long double log_binomial_impl(std::uint32_t n, std::uint32_t k) {
  if (k > n) throw DomainError("log_binomial: k must lie in [0, n]");
  k = std::min(k, n - k);
  if (k == 0) return 0.0L;
  std::uint64_t c = 0;
  if (exact_binomial(n, k, c)) return std::log(static_cast<long double>(c));
  return log_gamma_impl(n + 1.0L) - log_gamma_impl(k + 1.0L) - log_gamma_impl(n - k + 1.0L);
}

}  // namespace

double log_gamma(double x) { return static_cast<double>(log_gamma_impl(x)); }
long double log_gamma(long double x) { return log_gamma_impl(x); }

double log_binomial(std::uint32_t n, std::uint32_t k) {
  return static_cast<double>(log_binomial_impl(n, k));
}
long double log_binomial_ext(std::uint32_t n, std::uint32_t k) { return log_binomial_impl(n, k); }

}  // namespace fracosc
