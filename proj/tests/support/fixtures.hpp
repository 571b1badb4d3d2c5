#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace fracosc::testing {

/// Reads `key value` pairs from a fixtures file, ignoring `#` comments.
inline std::map<std::string, double> load_thresholds(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::map<std::string, double> out;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    std::string key;
    double v = 0.0;
    if (ls >> key >> v) out[key] = v;
  }
  return out;
}

inline std::string fixture_path(const std::string& name) {
  return std::string(FRACOSC_FIXTURE_DIR) + "/" + name;
}

}  // namespace fracosc::testing
