#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace fracosc::cli {

/// Record of one successful run, written as manifest.json once every output
/// file is in place.
class RunManifest {
 public:
  explicit RunManifest(std::string command);

  nlohmann::ordered_json& params() { return params_; }
  nlohmann::ordered_json& metrics() { return metrics_; }
  void set_seed(std::uint64_t seed) { seed_ = seed; }
  void add_output(const std::filesystem::path& path) { outputs_.push_back(path); }
  [[nodiscard]] const std::vector<std::filesystem::path>& outputs() const { return outputs_; }

  /// Verifies the outputs exist and writes `dir`/manifest.json atomically.
  void write(const std::filesystem::path& dir) const;

 private:
  std::string command_;
  nlohmann::ordered_json params_ = nlohmann::ordered_json::object();
  nlohmann::ordered_json metrics_ = nlohmann::ordered_json::object();
  std::uint64_t seed_ = 0;
  std::vector<std::filesystem::path> outputs_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace fracosc::cli
