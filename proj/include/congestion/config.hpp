#pragma once

/**
 * @file config.hpp
 * @brief Run configuration and its flat key/value text format.
 *
 * One `key = value` per line, `#` starts a comment.  Recognised keys:
 *
 *   dim n length t_end cfl epsilon delta gamma beta mu r
 *   scenario scenario.<name> snapshot_every
 *
 * Unknown keys are rejected so that typos do not silently fall back to
 * defaults.
 */

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "congestion/grid.hpp"
#include "congestion/laws.hpp"
#include "congestion/momentum.hpp"
#include "congestion/transport.hpp"

namespace congestion {

struct ScenarioSelection {
    std::string id = "compression";
    std::map<std::string, double> params;  ///< scenario.<key> entries without the prefix

    [[nodiscard]] double get(const std::string& key, double fallback) const;
};

struct RunConfig {
    int dim = 1;
    int n = 256;
    double length = 1.0;
    double t_end = 1.0;
    LawParams laws;
    StepControl step;
    SolverOptions solver;
    ScenarioSelection scenario;
    std::filesystem::path out_dir;  ///< empty: keep everything in memory
    int snapshot_every = 0;         ///< steps between field snapshots, 0 disables

    [[nodiscard]] Grid grid() const { return make_grid(dim, n, length); }
    /// Throws ConfigError.
    void validate() const;
};

RunConfig parse_config(std::istream& in);
RunConfig load_config(const std::filesystem::path& path);
/// Inverse of parse_config (out_dir is not serialised).
std::string to_config_text(const RunConfig& config);

}  // namespace congestion
