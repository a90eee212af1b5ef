#pragma once

// Experiment configuration: JSON text in, validated settings out.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace glmn::app {

/// Config or budget problem; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline const std::vector<std::string>& known_tasks() {
  static const std::vector<std::string> t{"structure-check", "verma-scan",      "graded-verma-scan",   "kw-verify",
                                          "levi-scan",       "frobenius-check", "regular-module-check"};
  return t;
}

enum class LambdaMode { ScanAll, Sample, Explicit };

struct ExperimentConfig {
  std::uint32_t p = 5;
  unsigned field_degree = 1;
  std::optional<std::vector<std::uint32_t>> modulus;
  int m = 1, n = 1;
  /// "E(i,j)" -> coefficient list, in input order.
  std::vector<std::pair<std::string, std::vector<std::int64_t>>> chi;
  LambdaMode lambda_mode = LambdaMode::ScanAll;
  std::size_t lambda_sample = 0;
  /// Explicit weights: per weight, per coordinate, a coefficient list.
  std::vector<std::vector<std::vector<std::int64_t>>> lambdas;
  std::vector<std::string> tasks;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t dim_budget = 2000;
  std::uint64_t line_budget = 10000;
  std::size_t gamma_samples = 4;
  std::size_t outside_samples = 20;
  std::size_t random_elements = 50;
};

/// Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);
/// Canonical echo of the inputs, embedded in every report.
nlohmann::ordered_json config_echo(const ExperimentConfig& c);

}  // namespace glmn::app
