#pragma once

// Plain-text scenario files: one `key = value` per line, `#` starts a
// comment. Keys: omega_n, zeta, beta, t_end, n, excitation.kind
// (cosine | sine | constant), excitation.amplitude, excitation.frequency.

#include <filesystem>
#include <istream>
#include <stdexcept>

#include "fracosc/response.hpp"

namespace fracosc {

class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Scenario {
  OscillatorParams params;
  double t_end = 0.0;
  std::size_t n = 0;
  Excitation excitation = Excitation::constant(0.0);
};

Scenario parse_scenario(std::istream& in);
Scenario load_scenario(const std::filesystem::path& path);

/// A forced comparison with id "scenario".
CaseDefinition to_case(const Scenario& s);

}  // namespace fracosc
