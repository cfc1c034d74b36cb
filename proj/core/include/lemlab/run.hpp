#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

namespace lemlab {

inline constexpr const char* kSchemaVersion = "1.0";

// Deterministic run description. The seed is mandatory: no harness draws
// entropy on its own.
struct RunConfig {
  std::string command;
  std::string input_path;
  std::map<std::string, double> params;
  std::string check;  // verify subcommand selector
  std::uint64_t seed = 0;
  bool seed_set = false;
  int grid = 256;
  int quad_nodes = 0;  // 0 selects the per-dimension default
  std::string out_dir = ".";
  bool emit_artifacts = true;

  double get(const std::string& name, double fallback) const;
  double require(const std::string& name) const;
};

struct RunResult {
  nlohmann::json report;
  std::string report_path;
  int exit_code = 0;  // 0 pass/inconclusive, 2 bound failure, 1 error (thrown)
};

RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

// Execute one harness: compute the payload, write the report and artifacts.
RunResult run(const RunConfig& config);

// Re-execute the config embedded in a written report and demand a
// byte-identical payload. Throws on schema mismatch or payload drift.
RunResult replay(const std::string& report_path, const std::string& out_dir);

const std::vector<std::string>& known_commands();

}  // namespace lemlab
