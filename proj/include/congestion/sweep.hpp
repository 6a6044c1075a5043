#pragma once

/**
 * @file sweep.hpp
 * @brief epsilon and delta sweeps and the sweep.csv table.
 *
 * sweep.csv layout:
 *
 *   # axis=<epsilon|delta> epsilon=.. delta=.. gamma=.. beta=.. mu=.. r=..
 *   axis,status,final_L1_p,...,final_max_divu_congested,max_L1_p,...,max_max_divu_congested
 *
 * The fixed parameter named by the axis is ignored.  Failed runs keep their
 * row with status != completed and zero metrics.
 */

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "congestion/config.hpp"
#include "congestion/simulation.hpp"

namespace congestion {

enum class SweepAxis { Epsilon, Delta };

std::string to_string(SweepAxis axis);
/// Throws ConfigError.
SweepAxis parse_sweep_axis(const std::string& text);

/// Metrics aggregated per run, in sweep.csv order.
inline constexpr std::array<const char*, 7> kSweepMetrics{
    "L1_p", "L1_big_lam", "excl_p", "excl_big_lam", "mp_residual", "meas_1md", "max_divu_congested"};

struct SweepRow {
    double axis_value = 0.0;
    RunStatus status = RunStatus::Completed;
    std::array<double, kSweepMetrics.size()> final_values{};
    std::array<double, kSweepMetrics.size()> max_values{};

    [[nodiscard]] bool completed() const noexcept { return status == RunStatus::Completed; }
};

struct SweepTable {
    SweepAxis axis = SweepAxis::Epsilon;
    LawParams params;  ///< shared parameters; the axis entry is meaningless
    std::vector<SweepRow> rows;

    [[nodiscard]] int completed_rows() const noexcept;
};

struct SweepOptions {
    int workers = 1;  ///< concurrent runs
    /// Per-run output goes to out_dir/<axis>_<value>/ when out_dir is set.
    std::filesystem::path out_dir;
};

/// Aggregates one trajectory into a row.
SweepRow summarize_run(double axis_value, const RunResult& run);

/// Runs config once per value.  Values must be strictly decreasing and at
/// least 3 (ConfigError).  Throws SweepDegenerate if fewer than 3 runs complete.
SweepTable sweep(const RunConfig& config, SweepAxis axis, const std::vector<double>& values,
                 const SweepOptions& options = {});

void write_sweep_csv(std::ostream& out, const SweepTable& table);
void write_sweep_csv(const std::filesystem::path& path, const SweepTable& table);
/// Throws ConfigError on malformed input.
SweepTable read_sweep_csv(std::istream& in);
SweepTable read_sweep_csv(const std::filesystem::path& path);

/// Column of a table by name: "L1_p" and "final_L1_p" select final values,
/// "max_L1_p" the max over time.  Throws ConfigError for unknown names.
/// Returns (axis value, metric) over completed rows.
std::vector<std::pair<double, double>> sweep_column(const SweepTable& table, const std::string& metric);

}  // namespace congestion
