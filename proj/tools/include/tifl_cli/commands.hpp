#pragma once

#include <ostream>

#include "tifl_cli/config.hpp"

namespace tifl::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitUnsafe = 3,
  kExitUsage = 64,
  kExitBadData = 65,
  kExitInternal = 70,
};

/// Thrown for missing inputs a command needs (maps to kExitUsage).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Plane field CSV/JSON, envelope CSV/JSON/PGM per plane and summary.json with focal summaries.
int cmd_simulate(const RunConfig& cfg, std::ostream& log);
/// Scenario CSV per plane, PGM heatmaps per swept value and plane, scenario JSON.
int cmd_sweep(const RunConfig& cfg, std::ostream& log);
/// plan.json; exit 0 when converged and safe, 3 when not, 2 for an infeasible target.
int cmd_plan(const RunConfig& cfg, std::ostream& log);
/// guidelines.json and guidelines.txt over the configured grids.
int cmd_guidelines(const RunConfig& cfg, std::ostream& log);
/// Grid-solver volume of each pair: volume_right / volume_left as CSV or JSON.
int cmd_export(const RunConfig& cfg, std::ostream& log);
/// Blocks serving /api/v1 on cfg.host:cfg.port.
int cmd_serve(const RunConfig& cfg, std::ostream& log);

/// Full entry point: parses argv, runs a command, maps errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tifl::cli
