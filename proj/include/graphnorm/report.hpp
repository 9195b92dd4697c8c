#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace graphnorm {

inline constexpr const char* kArtifactVersion = "graphnorm 0.1.0";
inline constexpr int kSchemaVersion = 1;

struct ExperimentSummary {
  double max_residual = 0.0;
  std::optional<double> target;
  double achieved = 0.0;
  bool pass = false;
};

/// Machine-readable result of one CLI experiment. Serialization round-trips
/// losslessly; two runs with equal flags differ at most in the timestamp.
struct ExperimentReport {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::vector<nlohmann::json> rows;
  ExperimentSummary summary;
  std::string versions = kArtifactVersion;
  std::string timestamp;

  nlohmann::json to_json() const;
  static ExperimentReport from_json(const nlohmann::json& j);
  /// Flat table of the row records.
  std::string to_csv() const;
};

std::string current_timestamp_utc();

}  // namespace graphnorm
