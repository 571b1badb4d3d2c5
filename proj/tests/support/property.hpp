#pragma once

// Hand-rolled generators for property tests. Every property draws from its
// own stream so adding a property does not perturb the others; the base seed
// can be changed with FRACOSC_TEST_SEED to explore new cases.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "doctest.h"
#include "fracosc/types.hpp"

namespace fracosc::testing {

inline std::uint64_t base_seed() {
  if (const char* env = std::getenv("FRACOSC_TEST_SEED")) return std::stoull(env);
  return 0x5eedf00dULL;
}

class Gen {
 public:
  explicit Gen(std::uint64_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(base_seed()), static_cast<std::uint32_t>(stream),
                      static_cast<std::uint32_t>(stream >> 32)};
    rng_.seed(seq);
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  /// omega_n in [1, 10], zeta in the calibrated range, beta in [0, 1].
  OscillatorParams params() {
    return {uniform(1.0, 10.0), uniform(kCalibratedZetaMin, kCalibratedZetaMax), uniform(0.0, 1.0)};
  }
  OscillatorParams params_with_beta(double beta) {
    OscillatorParams p = params();
    p.beta = beta;
    return p;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Runs `body(gen, case_index)` for `cases` generated cases; the case index
/// is attached to any failure message.
template <typename Body>
void for_all(std::uint64_t stream, int cases, Body&& body) {
  Gen gen(stream);
  for (int i = 0; i < cases; ++i) {
    INFO("property case " << i << " (stream " << stream << ")");
    body(gen, i);
  }
}

inline std::string describe(const OscillatorParams& p) {
  return "omega_n=" + std::to_string(p.omega_n) + " zeta=" + std::to_string(p.zeta) +
         " beta=" + std::to_string(p.beta);
}

}  // namespace fracosc::testing
