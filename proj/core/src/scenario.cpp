#include "fracosc/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <string>

namespace fracosc {
namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_real(const std::string& key, const std::string& text) {
  double v = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ScenarioError("scenario: '" + key + "' is not a number: '" + text + "'");
  return v;
}

std::size_t parse_count(const std::string& key, const std::string& text) {
  std::size_t v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size())
    throw ScenarioError("scenario: '" + key + "' is not a non-negative integer: '" + text + "'");
  return v;
}

}  // namespace

Scenario parse_scenario(std::istream& in) {
  static const char* const kKeys[] = {"omega_n", "zeta", "beta", "t_end", "n",
                                      "excitation.kind", "excitation.amplitude",
                                      "excitation.frequency"};
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ScenarioError("scenario line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (std::find(std::begin(kKeys), std::end(kKeys), key) == std::end(kKeys))
      throw ScenarioError("scenario line " + std::to_string(line_no) + ": unknown key '" + key +
                          "'");
    if (!kv.emplace(key, value).second)
      throw ScenarioError("scenario line " + std::to_string(line_no) + ": duplicate key '" + key +
                          "'");
  }

  const auto require = [&](const std::string& key) -> const std::string& {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ScenarioError("scenario: missing key '" + key + "'");
    return it->second;
  };

  Scenario s;
  s.params.omega_n = parse_real("omega_n", require("omega_n"));
  s.params.zeta = parse_real("zeta", require("zeta"));
  s.params.beta = parse_real("beta", require("beta"));
  validate_params(s.params);
  s.t_end = parse_real("t_end", require("t_end"));
  s.n = parse_count("n", require("n"));
  if (!(s.t_end > 0.0)) throw ScenarioError("scenario: t_end must be > 0");
  if (s.n < 2) throw ScenarioError("scenario: n must be >= 2");

  const std::string& kind = require("excitation.kind");
  const double amplitude = parse_real("excitation.amplitude", require("excitation.amplitude"));
  const auto freq = kv.find("excitation.frequency");
  if (kind == "constant") {
    s.excitation = Excitation::constant(amplitude);
  } else if (kind == "cosine" || kind == "sine") {
    if (freq == kv.end()) throw ScenarioError("scenario: missing key 'excitation.frequency'");
    const double w = parse_real("excitation.frequency", freq->second);
    s.excitation = kind == "cosine" ? Excitation::cosine(amplitude, w) : Excitation::sine(amplitude, w);
  } else {
    throw ScenarioError("scenario: excitation.kind must be cosine, sine or constant, got '" +
                        kind + "'");
  }
  return s;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path.string() + "'");
  return parse_scenario(in);
}

CaseDefinition to_case(const Scenario& s) {
  return CaseDefinition{"scenario", s.params, s.excitation, s.t_end, s.n};
}

}  // namespace fracosc
