#include "graphnorm/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <set>
#include <sstream>

namespace graphnorm {

std::string current_timestamp_utc() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json ExperimentReport::to_json() const {
  nlohmann::json j;
  j["schema"] = kSchemaVersion;
  j["command"] = command;
  j["parameters"] = parameters;
  j["rows"] = rows;
  nlohmann::json s;
  s["max_residual"] = summary.max_residual;
  if (summary.target) s["target"] = *summary.target;
  s["achieved"] = summary.achieved;
  s["pass"] = summary.pass;
  j["summary"] = std::move(s);
  j["versions"] = versions;
  j["timestamp"] = timestamp;
  return j;
}

ExperimentReport ExperimentReport::from_json(const nlohmann::json& j) {
  ExperimentReport r;
  r.command = j.at("command").get<std::string>();
  r.parameters = j.at("parameters");
  for (const auto& row : j.at("rows")) r.rows.push_back(row);
  const auto& s = j.at("summary");
  r.summary.max_residual = s.at("max_residual").get<double>();
  if (s.contains("target")) r.summary.target = s.at("target").get<double>();
  r.summary.achieved = s.at("achieved").get<double>();
  r.summary.pass = s.at("pass").get<bool>();
  r.versions = j.at("versions").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  return r;
}

std::string ExperimentReport::to_csv() const {
  std::set<std::string> keys;
  for (const auto& row : rows) {
    for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
  }
  std::ostringstream out;
  bool first = true;
  for (const std::string& k : keys) {
    if (!first) out << ',';
    out << k;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const std::string& k : keys) {
      if (!first) out << ',';
      first = false;
      if (row.contains(k)) {
        const auto& v = row.at(k);
        if (v.is_string()) {
          out << v.get<std::string>();
        } else {
          out << v.dump();
        }
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace graphnorm
