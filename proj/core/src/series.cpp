#include "fracosc/series.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <span>

#include "fracosc/specfun.hpp"
#include "parallel.hpp"

namespace fracosc {
namespace {

using ld = long double;

constexpr ld kNegInf = -std::numeric_limits<ld>::infinity();
// Terms more than e^-50 below the running maximum cannot change a long double sum.
constexpr ld kNegligibleNats = 50.0L;
// Terms within e^-40 of the maximum count towards (m_max, l_max).
constexpr ld kSignificantNats = 40.0L;
const ld kOverflowLog = std::log(static_cast<ld>(DBL_MAX)) - 10.0L;
const ld kLn10 = std::numbers::ln10_v<ld>;

struct Term {
  ld log_abs;
  ld weight;  // multiplier for the derivative-weighted sum
  int m;
  int l;
  int sign;
};

// Sum of alternating diagonal blocks, kept relative to the largest term seen.
class DiagonalSum {
 public:
  explicit DiagonalSum(ld tol) : tol_(tol) {}

  // Returns true once kStopBlocks consecutive blocks were negligible.
  bool add_block(std::span<const Term> terms) {
    ld block_max = kNegInf;
    for (const auto& t : terms) block_max = std::max(block_max, t.log_abs);
    if (block_max > kOverflowLog) overflow_ = true;
    if (block_max > max_log_) rescale(block_max);

    ld block = 0, weighted = 0, block_abs = 0;
    if (block_max != kNegInf) {
      for (const auto& t : terms) {
        const ld rel = t.log_abs - max_log_;
        if (rel < -kNegligibleNats) continue;
        const ld v = std::exp(rel);
        block += t.sign * v;
        weighted += t.sign * v * t.weight;
        block_abs += v;
        if (rel >= -kSignificantNats) {
          m_max_ = std::max(m_max_, t.m);
          l_max_ = std::max(l_max_, t.l);
        }
      }
    }
    add_compensated(value_, value_c_, block);
    add_compensated(deriv_, deriv_c_, weighted);
    abs_ += block_abs;
    last_block_ = std::abs(block);
    ++diagonals_;
    below_ = std::abs(block) <= tol_ * std::abs(value_ + value_c_) ? below_ + 1 : 0;
    return below_ >= kStopBlocks;
  }

  [[nodiscard]] ld max_log() const { return max_log_; }
  [[nodiscard]] ld value() const { return scaled(value_ + value_c_); }
  [[nodiscard]] ld weighted() const { return scaled(deriv_ + deriv_c_); }
  [[nodiscard]] ld abs_sum() const { return scaled(abs_); }
  [[nodiscard]] ld last_block() const { return scaled(last_block_); }
  [[nodiscard]] int diagonals() const { return diagonals_; }
  [[nodiscard]] int m_max() const { return m_max_; }
  [[nodiscard]] int l_max() const { return l_max_; }
  [[nodiscard]] bool overflow() const { return overflow_; }

 private:
  static void add_compensated(ld& sum, ld& comp, ld x) {
    const ld s = sum + x;
    comp += std::abs(sum) >= std::abs(x) ? (sum - s) + x : (x - s) + sum;
    sum = s;
  }

  void rescale(ld new_max) {
    const ld f = max_log_ == kNegInf ? 0.0L : std::exp(max_log_ - new_max);
    value_ *= f;
    value_c_ *= f;
    deriv_ *= f;
    deriv_c_ *= f;
    abs_ *= f;
    last_block_ *= f;
    max_log_ = new_max;
  }

  [[nodiscard]] ld scaled(ld x) const {
    return max_log_ == kNegInf ? 0.0L : x * std::exp(max_log_);
  }

  ld tol_;
  ld max_log_ = kNegInf;
  ld value_ = 0, value_c_ = 0;
  ld deriv_ = 0, deriv_c_ = 0;
  ld abs_ = 0;
  ld last_block_ = 0;
  int below_ = 0;
  int diagonals_ = 0;
  int m_max_ = 0;
  int l_max_ = 0;
  bool overflow_ = false;
};

void check_tol(double tol) {
  if (!(tol > 0.0) || tol > 1e-3) throw DomainError("tol must lie in (0, 1e-3]");
}

struct StableResult {
  SeriesEval eval;
  double amplitude = 0.0;
};

double digits(ld max_log, ld scale) {
  if (max_log == kNegInf) return 0.0;
  if (!(scale > 0)) return std::numeric_limits<double>::infinity();
  return static_cast<double>((max_log - std::log(scale)) / kLn10);
}

}  // namespace

SeriesEval biv_mittag_leffler(double a1, double a2, double b, double z1, double z2, double tol) {
  if (!(a1 > 0.0)) throw DomainError("a1 must be > 0");
  if (!(a2 > 0.0)) throw DomainError("a2 must be > 0");
  if (!(b > 0.0)) throw DomainError("b must be > 0");
  if (!std::isfinite(a1) || !std::isfinite(a2) || !std::isfinite(b) || !std::isfinite(z1) ||
      !std::isfinite(z2))
    throw DomainError("Mittag-Leffler arguments must be finite");
  check_tol(tol);

  const ld lz1 = z1 == 0.0 ? kNegInf : std::log(std::abs(static_cast<ld>(z1)));
  const ld lz2 = z2 == 0.0 ? kNegInf : std::log(std::abs(static_cast<ld>(z2)));
  const int s1 = z1 < 0.0 ? -1 : 1;
  const int s2 = z2 < 0.0 ? -1 : 1;

  DiagonalSum sum(tol);
  std::vector<Term> terms;
  for (int k = 0; k <= kMaxDiagonal; ++k) {
    terms.clear();
    const int m_lo = z1 == 0.0 ? k : 0;
    const int m_hi = z2 == 0.0 ? 0 : k;
    for (int m = m_lo; m <= m_hi; ++m) {
      const int l = k - m;
      const ld lp = (l == 0 ? 0.0L : l * lz1) + (m == 0 ? 0.0L : m * lz2);
      const ld arg = static_cast<ld>(b) + static_cast<ld>(a1) * l + static_cast<ld>(a2) * m;
      const ld log_abs = log_binomial_ext(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m)) + lp -
                         log_gamma(arg);
      const int sign = ((l % 2 == 1) ? s1 : 1) * ((m % 2 == 1) ? s2 : 1);
      terms.push_back({log_abs, 1.0L, m, l, sign});
    }
    if (sum.add_block(terms)) break;
  }

  SeriesEval out;
  const ld v = sum.value();
  out.value = static_cast<double>(v);
  out.m_max = sum.m_max();
  out.l_max = sum.l_max();
  out.diagonals = sum.diagonals();
  out.truncation_bound = static_cast<double>(2.0L * sum.last_block());
  out.abs_sum = static_cast<double>(sum.abs_sum());
  out.cancellation = digits(sum.max_log(), std::abs(v));
  out.overflow = sum.overflow();
  out.valid = !out.overflow && std::isfinite(out.value) &&
              out.cancellation <= kMaxCancellationDigits;
  return out;
}

ImpulseSeries::ImpulseSeries(const OscillatorParams& p, ImpulseSeriesOptions opts, double t_hint)
    : p_(validate_params(p)), opts_(opts), m_cap_per_diag_(p.zeta > 0.0 ? 1 : 0) {
  check_tol(opts_.tol);
  if (!(t_hint >= 0.0) || !std::isfinite(t_hint)) throw DomainError("t_hint must be >= 0");
  const double wt = p_.omega_n * t_hint;
  const int k_pre =
      std::min(kMaxDiagonal, static_cast<int>(std::ceil(1.5 * wt * (1.0 + p_.zeta))) + 40);
  cache_.reserve(static_cast<std::size_t>(k_pre) + 1);
  for (int k = 0; k <= k_pre; ++k) cache_.push_back(make_diagonal(k));
}

ImpulseSeries::Diagonal ImpulseSeries::make_diagonal(int k) const {
  Diagonal d;
  const int m_hi = m_cap_per_diag_ ? k : 0;
  const ld log_2zeta = p_.zeta > 0.0 ? std::log(2.0L * p_.zeta) : kNegInf;
  const ld beta = p_.beta;
  d.coef.reserve(static_cast<std::size_t>(m_hi) + 1);
  d.exponent.reserve(static_cast<std::size_t>(m_hi) + 1);
  for (int m = 0; m <= m_hi; ++m) {
    const ld e = 2.0L * k - beta * m;
    const ld c = log_binomial_ext(static_cast<std::uint32_t>(k), static_cast<std::uint32_t>(m)) +
                 (m == 0 ? 0.0L : m * log_2zeta) - log_gamma(e + 2.0L);
    d.coef.push_back(c);
    d.exponent.push_back(e);
  }
  return d;
}

SeriesEval ImpulseSeries::evaluate(double t) const {
  if (!(t >= 0.0) || !std::isfinite(t)) throw DomainError("t must be >= 0");
  if (t == 0.0) {
    SeriesEval zero;
    zero.cancellation = 0.0;
    return zero;
  }
  return opts_.mode == SeriesMode::stable ? evaluate_stable(t) : evaluate_naive(t);
}

namespace {

// Shared by both modes: the stable sum plus the local amplitude.
template <typename DiagFn>
StableResult stable_sum(const OscillatorParams& p, double t, double tol, DiagFn&& diagonal) {
  const ld lt = std::log(static_cast<ld>(t));
  const ld lx = std::log(static_cast<ld>(p.omega_n) * t);
  DiagonalSum sum(tol);
  std::vector<Term> terms;
  for (int k = 0; k <= kMaxDiagonal; ++k) {
    const auto& [coef, exponent] = diagonal(k);
    const int sign = (k % 2 == 0) ? 1 : -1;
    terms.resize(coef.size());
    for (std::size_t j = 0; j < coef.size(); ++j) {
      const int m = static_cast<int>(j);
      terms[j] = {coef[j] + exponent[j] * lx + lt, exponent[j] + 1.0L, m, k - m, sign};
    }
    if (sum.add_block(terms)) break;
  }
  const ld value = sum.value();
  const ld deriv = sum.weighted() / t;
  const ld amplitude = std::sqrt(value * value + (deriv / p.omega_n) * (deriv / p.omega_n));

  StableResult r;
  r.amplitude = static_cast<double>(amplitude);
  SeriesEval& out = r.eval;
  out.value = static_cast<double>(value);
  out.m_max = sum.m_max();
  out.l_max = sum.l_max();
  out.diagonals = sum.diagonals();
  out.truncation_bound = static_cast<double>(2.0L * sum.last_block());
  out.abs_sum = static_cast<double>(sum.abs_sum());
  out.cancellation = digits(sum.max_log(), amplitude);
  out.overflow = sum.overflow();
  out.valid = !out.overflow && std::isfinite(out.value) &&
              out.cancellation <= kMaxCancellationDigits;
  return r;
}

}  // namespace

SeriesEval ImpulseSeries::evaluate_stable(double t) const {
  Diagonal scratch;
  return stable_sum(p_, t, opts_.tol, [&](int k) -> const Diagonal& {
           if (static_cast<std::size_t>(k) < cache_.size()) return cache_[static_cast<std::size_t>(k)];
           scratch = make_diagonal(k);
           return scratch;
         })
      .eval;
}

SeriesEval ImpulseSeries::evaluate_naive(double t) const {
  const double a = p_.damping_coefficient();
  const double w2 = p_.omega_n * p_.omega_n;
  const double beta = p_.beta;

  double sum = 0.0, abs_sum = 0.0, last = 0.0;
  int below = 0, diagonals = 0, m_max = 0, l_max = 0;
  for (int k = 0; k <= kMaxDiagonal; ++k) {
    double block = 0.0;
    const int m_hi = m_cap_per_diag_ ? k : 0;
    for (int m = 0; m <= m_hi; ++m) {
      const int l = k - m;
      const double e = 2.0 * l + (2.0 - beta) * m + 1.0;
      const double binom = std::tgamma(k + 1.0) / (std::tgamma(m + 1.0) * std::tgamma(l + 1.0));
      const double num = binom * std::pow(a, m) * std::pow(w2, l) * std::pow(t, e);
      const double term = num / std::tgamma(e + 1.0);
      block += term;
      if (term != 0.0) {
        m_max = std::max(m_max, m);
        l_max = std::max(l_max, l);
      }
    }
    sum += (k % 2 == 0) ? block : -block;
    abs_sum += std::abs(block);
    last = block;
    ++diagonals;
    if (!std::isfinite(sum)) break;
    below = std::abs(block) <= opts_.tol * std::abs(sum) ? below + 1 : 0;
    if (below >= kStopBlocks) break;
  }

  // The extended-precision pass supplies the local amplitude the rounding
  // error of the double sum is judged against.
  Diagonal scratch;
  const StableResult shadow = stable_sum(p_, t, opts_.tol, [&](int k) -> const Diagonal& {
    if (static_cast<std::size_t>(k) < cache_.size()) return cache_[static_cast<std::size_t>(k)];
    scratch = make_diagonal(k);
    return scratch;
  });

  SeriesEval out;
  out.value = sum;
  out.m_max = m_max;
  out.l_max = l_max;
  out.diagonals = diagonals;
  out.truncation_bound = 2.0 * std::abs(last);
  out.abs_sum = abs_sum;
  out.cancellation = shadow.eval.cancellation;
  out.overflow = !std::isfinite(sum) || !std::isfinite(abs_sum);
  out.valid = !out.overflow && DBL_EPSILON * abs_sum < shadow.amplitude;
  return out;
}

TimeSeries ImpulseSeries::sample(const TimeGrid& grid, unsigned jobs) const {
  std::vector<double> v(grid.size());
  std::vector<std::uint8_t> ok(grid.size());
  detail::parallel_for(grid.size(), jobs, [&](std::size_t i) {
    const SeriesEval e = evaluate(grid.at(i));
    v[i] = e.value;
    ok[i] = e.valid;
  });
  return TimeSeries(grid, std::move(v), std::move(ok), "m");
}

SeriesEval impulse_series(const OscillatorParams& p, double t, double tol, SeriesMode mode) {
  return ImpulseSeries(p, {tol, mode}, t).evaluate(t);
}

double impulse_beta0(const OscillatorParams& p, double t) {
  validate_params(p);
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  const double wd = p.omega_n * std::sqrt(1.0 + 2.0 * p.zeta);
  return std::sin(wd * t) / wd;
}

double impulse_beta1(const OscillatorParams& p, double t) {
  validate_params(p);
  if (!(t >= 0.0)) throw DomainError("t must be >= 0");
  if (!(p.zeta < 1.0)) throw DomainError("zeta must be < 1 for the underdamped closed form");
  const double wd = p.omega_n * std::sqrt(1.0 - p.zeta * p.zeta);
  return std::exp(-p.zeta * p.omega_n * t) * std::sin(wd * t) / wd;
}

std::optional<double> blow_up_time(const OscillatorParams& p, SeriesMode mode, double t_max,
                                   double dt) {
  if (!(t_max > 0.0)) throw DomainError("t_max must be > 0");
  if (!(dt > 0.0)) throw DomainError("dt must be > 0");
  const ImpulseSeries series(p, {kDefaultSeriesTol, mode}, t_max);
  for (std::size_t i = 1;; ++i) {
    const double t = static_cast<double>(i) * dt;
    if (t > t_max * (1.0 + 1e-12)) break;
    if (!series.evaluate(t).valid) return t;
  }
  return std::nullopt;
}

}  // namespace fracosc
