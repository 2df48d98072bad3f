#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "krein/types.hpp"

namespace krein::cli {

struct RunConfig {
  std::string subcommand;
  std::string input_path;
  std::string action_path;  // invariant only
  std::string output_path;  // empty: print to stdout
  std::string format = "json";  // json | csv (csv: counterexample only)
  double tol = kDefaultTol;
  std::uint64_t seed = 1;
  int m_max = 10;
  int dim = 1;
  int neg = 0;
  int cutoff = 20;
  int samples = 24;
};

struct Check {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

struct Report {
  std::string subcommand;
  std::vector<Check> checks;
  std::string payload_json;  // serialized object, stable key order
  std::string config_json;   // the effective configuration, echoed
  double wall_time_ms = 0.0;

  bool pass() const;
};

/// Dispatches to the module pipelines.  Throws std::invalid_argument for bad
/// inputs and std::runtime_error for internal inconsistencies.
Report run(const RunConfig& config);

std::string report_to_json(const Report& report);
/// Frozen schema, versioned in the header comment line.
std::string report_to_csv(const Report& report);

/// Serializes to config.output_path (directory overridable through
/// KREIN_OUTPUT_DIR) or returns the text for stdout when no path is set.
std::string render_report(const Report& report, const RunConfig& config);
void deliver_report(const Report& report, const RunConfig& config);

/// 0 all checks pass, 1 check failure; parse errors and internal
/// inconsistencies are reported by exceptions and mapped in main_entry.
int exit_code(const Report& report);

int main_entry(int argc, const char* const* argv);

}  // namespace krein::cli
