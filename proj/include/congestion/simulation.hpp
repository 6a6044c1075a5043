#pragma once

/**
 * @file simulation.hpp
 * @brief Single-run orchestration.
 *
 * Each step: laws on rho^n, momentum solve (warm started from the previous
 * velocity), diagnostics, dt = min(advective limit, relaxation limit,
 * remaining time), then density and Lambda transport.  A closing record with
 * dt = 0 describes the state at t_end.
 *
 * With a non-empty out_dir the run writes
 *
 *   diagnostics.csv     one row per record
 *   snapshots/          rho, Lambda and velocity components at the cadence and at the end
 *   report.txt          status, energy ledger summary, Poincare constant
 *
 * Output written before a failure is kept.
 */

#include <string>
#include <vector>

#include "congestion/config.hpp"
#include "congestion/diagnostics.hpp"
#include "congestion/transport.hpp"

namespace congestion {

enum class RunStatus { Completed, SolverFailed, CongestionOverflow };

std::string to_string(RunStatus status);

struct RunResult {
    SimState final_state;
    std::vector<DiagnosticsRecord> trajectory;
    RunStatus status = RunStatus::Completed;
    std::string message;  ///< failure description, empty on success

    [[nodiscard]] bool completed() const noexcept { return status == RunStatus::Completed; }
};

/// Throws ConfigError for an invalid config.  Solver and overflow failures are
/// returned in RunResult::status, not thrown.
RunResult run_simulation(const RunConfig& config);

/// Summary of a trajectory's energy balance (used by report.txt).
EnergyLedger energy_ledger(const RunConfig& config, const std::vector<DiagnosticsRecord>& trajectory);

}  // namespace congestion
