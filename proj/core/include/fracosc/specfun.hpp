#pragma once

// Log-domain building blocks for series whose individual terms overflow
// double precision long before the sum does.

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>

namespace fracosc {

/// A real number stored as (ln|v|, sign(v)). Zero is (-inf, 0).
template <typename Real>
struct BasicLogMagnitude {
  Real log_abs = -std::numeric_limits<Real>::infinity();
  int sign = 0;

  static BasicLogMagnitude from_value(Real v) {
    if (v == Real(0)) return {};
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
  }
  static BasicLogMagnitude from_log(Real log_abs, int sign) {
    if (sign == 0 || log_abs == -std::numeric_limits<Real>::infinity()) return {};
    return {log_abs, sign > 0 ? 1 : -1};
  }

  [[nodiscard]] bool is_zero() const { return sign == 0; }
  [[nodiscard]] Real value() const { return sign == 0 ? Real(0) : sign * std::exp(log_abs); }

  friend BasicLogMagnitude operator*(const BasicLogMagnitude& a, const BasicLogMagnitude& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.log_abs + b.log_abs, a.sign * b.sign};
  }
};

using LogMagnitude = BasicLogMagnitude<double>;

template <typename Real>
struct BasicSignedSum {
  Real value = 0;
  /// max ln|term|; -inf for an empty or all-zero input.
  Real max_term_log = -std::numeric_limits<Real>::infinity();
  /// max_term_log - ln|value|, in nats. +inf when the sum is exactly zero.
  Real cancellation = 0;
};

using SignedSum = BasicSignedSum<double>;

/// Sums sign_i * exp(log_abs_i) as exp(M) * sum sign_i * exp(log_abs_i - M),
/// M = max log_abs, so no intermediate overflows. The returned cancellation
/// measures how many nats of magnitude were lost to sign mixing.
template <typename Real>
BasicSignedSum<Real> accumulate_signed(std::span<const BasicLogMagnitude<Real>> terms) {
  BasicSignedSum<Real> out;
  for (const auto& t : terms)
    if (t.sign != 0 && t.log_abs > out.max_term_log) out.max_term_log = t.log_abs;
  if (out.max_term_log == -std::numeric_limits<Real>::infinity()) {
    out.cancellation = std::numeric_limits<Real>::infinity();
    return out;
  }
  // Neumaier-compensated so that the result does not depend on term order
  // beyond a few ulps.
  Real sum = 0, comp = 0;
  for (const auto& t : terms) {
    if (t.sign == 0) continue;
    const Real x = t.sign * std::exp(t.log_abs - out.max_term_log);
    const Real s = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }
  sum += comp;
  if (sum == Real(0)) {
    out.value = 0;
    out.cancellation = std::numeric_limits<Real>::infinity();
    return out;
  }
  out.value = sum * std::exp(out.max_term_log);
  out.cancellation = -std::log(std::abs(sum));
  return out;
}

inline SignedSum accumulate_signed(std::span<const LogMagnitude> terms) {
  return accumulate_signed<double>(terms);
}

/// ln Gamma(x) for x > 0. Small arguments are shifted up by the recurrence
/// Gamma(x+1) = x Gamma(x) into the range of the Stirling series; positive
/// integers up to 30 are looked up exactly.
double log_gamma(double x);
long double log_gamma(long double x);

/// ln C(n, k). Exact (correctly rounded log of an exact integer) while the
/// coefficient fits in 64 bits, otherwise via log_gamma.
double log_binomial(std::uint32_t n, std::uint32_t k);
long double log_binomial_ext(std::uint32_t n, std::uint32_t k);

}  // namespace fracosc
