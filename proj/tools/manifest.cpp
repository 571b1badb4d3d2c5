#include "manifest.hpp"

#include <stdexcept>

#include "fracosc/csv.hpp"

namespace fracosc::cli {

RunManifest::RunManifest(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

void RunManifest::write(const std::filesystem::path& dir) const {
  nlohmann::ordered_json j;
  j["command"] = command_;
  j["params"] = params_;
  j["seed"] = seed_;
  auto outs = nlohmann::ordered_json::array();
  for (const auto& p : outputs_) {
    if (!std::filesystem::exists(p))
      throw std::runtime_error("manifest output missing: " + p.string());
    outs.push_back(p.string());
  }
  j["outputs"] = outs;
  j["metrics"] = metrics_;
  j["wall_time_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
  write_file_atomic(dir / "manifest.json", j.dump(2) + "\n");
}

}  // namespace fracosc::cli
