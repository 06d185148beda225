// Scenario configuration and machine-readable run reports. Reports carry
// every raw count needed to re-derive the reported statistics offline.

#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "mtc/protocol.hpp"

namespace mtc {

using json = nlohmann::ordered_json;

struct config_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class StateKind { kPure, kMixture };

struct Scenario {
  StateKind kind = StateKind::kPure;
  int n = 1;
  std::string pattern;        // n characters of '0'/'1'
  double p = 0.5;
  std::optional<double> phi;  // absent => mixture
  ProtocolOptions options;

  // Validates every field against the owning modules' preconditions;
  // throws config_error with a readable message.
  static Scenario from_json(const json& j);
  json to_json() const;

  Preparation preparation() const;
  TwoComponentState pure_state() const;  // config_error unless kind == pure
};

// Parse a config file (JSON), apply CLI overrides on top.
Scenario load_scenario(const std::string& path);

json report_header(const Scenario& scenario);
json run_counts_json(const RunCounts& c, bool z_basis);
json phase_report(const Scenario& scenario, const PhaseExtractionResult& result);
json decision_report(const Scenario& scenario, const Decision& decision);

// Human-readable one-screen summary of a report.
std::string summarize(const json& report);

}  // namespace mtc
