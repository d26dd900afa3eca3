#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wellspec/spectrum.hpp"

namespace wellspec {

inline constexpr int kReportSchema = 1;

struct ConfigEcho {
  std::string position;  // "p/n" for exact positions, decimal otherwise
  bool exact = false;
  double rho = 0.0;
  double f = 0.0;
  double k_max = 0.0;
  friend bool operator==(const ConfigEcho&, const ConfigEcho&) = default;
};

struct ReportEntry {
  std::string kind;
  std::int64_t n = 0;  // nodal entries only
  std::int64_t j = 0;
  double wavenumber = 0.0;  // kL, or kappaL for the negative-energy state
  double energy = 0.0;
  double residual = 0.0;
  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct CheckResult {
  std::string name;
  double value = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

struct RunReport {
  int schema = kReportSchema;
  std::string command;
  ConfigEcho config;
  std::vector<ReportEntry> entries;
  std::vector<CheckResult> checks;
  std::optional<double> elapsed_seconds;
  friend bool operator==(const RunReport&, const RunReport&) = default;

  bool all_passed() const;
};

ConfigEcho echo_config(const DimensionlessConfig& config, double k_max);
ReportEntry to_entry(const EigenState& state);

std::string to_json(const RunReport& report);
/// Throws std::invalid_argument on malformed input or an unknown schema version.
RunReport report_from_json(const std::string& text);

}  // namespace wellspec
