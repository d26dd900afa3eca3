#include "wellspec/report.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include <json.hpp>

namespace wellspec {

using nlohmann::json;

void to_json(json& j, const ConfigEcho& c) {
  j = json{{"position", c.position}, {"exact", c.exact}, {"rho", c.rho}, {"f", c.f},
           {"k_max", c.k_max}};
}

void from_json(const json& j, ConfigEcho& c) {
  j.at("position").get_to(c.position);
  j.at("exact").get_to(c.exact);
  j.at("rho").get_to(c.rho);
  j.at("f").get_to(c.f);
  j.at("k_max").get_to(c.k_max);
}

void to_json(json& j, const ReportEntry& e) {
  j = json{{"kind", e.kind}, {"wavenumber", e.wavenumber}, {"energy", e.energy},
           {"residual", e.residual}};
  if (e.kind == "Nodal") {
    j["n"] = e.n;
    j["j"] = e.j;
  }
}

void from_json(const json& j, ReportEntry& e) {
  j.at("kind").get_to(e.kind);
  j.at("wavenumber").get_to(e.wavenumber);
  j.at("energy").get_to(e.energy);
  j.at("residual").get_to(e.residual);
  e.n = j.value("n", std::int64_t{0});
  e.j = j.value("j", std::int64_t{0});
}

void to_json(json& j, const CheckResult& c) {
  j = json{{"name", c.name}, {"value", c.value}, {"tolerance", c.tolerance}, {"passed", c.passed}};
}

void from_json(const json& j, CheckResult& c) {
  j.at("name").get_to(c.name);
  j.at("value").get_to(c.value);
  j.at("tolerance").get_to(c.tolerance);
  j.at("passed").get_to(c.passed);
}

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

ConfigEcho echo_config(const DimensionlessConfig& config, double k_max) {
  ConfigEcho echo;
  if (const auto exact = config.exact_position()) {
    echo.position = exact->to_string();
    echo.exact = true;
  } else {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, config.rho());
    echo.position.assign(buf, res.ptr);
  }
  echo.rho = config.rho();
  echo.f = config.f();
  echo.k_max = k_max;
  return echo;
}

ReportEntry to_entry(const EigenState& state) {
  ReportEntry e;
  e.kind = std::string(state.label());
  if (const auto* nodal = std::get_if<Nodal>(&state.kind)) {
    e.n = nodal->n;
    e.j = nodal->j;
  }
  e.wavenumber = state.wavenumber();
  e.energy = state.energy;
  e.residual = state.residual;
  return e;
}

std::string to_json(const RunReport& report) {
  json j{{"schema", report.schema},   {"command", report.command}, {"config", report.config},
         {"entries", report.entries}, {"checks", report.checks}};
  if (report.elapsed_seconds) j["elapsed_seconds"] = *report.elapsed_seconds;
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    RunReport r;
    j.at("schema").get_to(r.schema);
    if (r.schema != kReportSchema) {
      throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
    }
    j.at("command").get_to(r.command);
    j.at("config").get_to(r.config);
    j.at("entries").get_to(r.entries);
    j.at("checks").get_to(r.checks);
    if (j.contains("elapsed_seconds")) r.elapsed_seconds = j.at("elapsed_seconds").get<double>();
    return r;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("malformed report: ") + e.what());
  }
}

}  // namespace wellspec
