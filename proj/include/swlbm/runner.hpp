#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "swlbm/config.hpp"
#include "swlbm/metrics.hpp"

namespace swlbm {

struct RunOptions {
  /// Takes precedence over SWLBM_OUTPUT_DIR and the config's output.directory.
  std::optional<std::filesystem::path> output_dir;
  bool write_files = true;
};

struct RunReport {
  std::string name;
  CaseKind kind = CaseKind::Riemann1D;
  SolverKind solver = SolverKind::Lbm;

  bool aborted = false;
  std::string abort_reason;

  double wall_seconds = 0.0;
  long steps = 0;
  double final_time = 0.0;
  bool reached_steady = false;
  double last_change = 0.0;

  /// Totals from the solver's own diagnostics: final minus initial.
  double mass_change = 0.0;
  double momentum_change = 0.0;
  double mass_drift = 0.0;
  /// Mass change minus the net mass that crossed open sides (when the solver tracks it).
  std::optional<double> mass_balance;

  double min_rho = 0.0;
  std::map<std::string, double> metrics;
  /// Metrics that could not be evaluated, with the reason.
  std::map<std::string, std::string> unavailable;
  std::vector<std::filesystem::path> manifest;
  std::vector<std::string> warnings;

  std::vector<FieldSnapshot> snapshots;
};

/// Output directory for `config`: options, then SWLBM_OUTPUT_DIR, then output.directory.
std::filesystem::path resolve_output_dir(const CaseConfig& config, const RunOptions& options);

/**
 * @brief Runs a case with its configured solver, writes fields and evaluates metrics.
 *
 * Solver failures (blow-up, vacuum) do not throw; they are recorded in the
 * report with `aborted` set. Output files are written for every snapshot and
 * listed in the manifest.
 */
RunReport run_case(const CaseConfig& config, const RunOptions& options = {});

/// The report as JSON, without the field data.
std::string report_json(const RunReport& report);

}  // namespace swlbm
