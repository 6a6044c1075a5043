#pragma once

/**
 * @file classify.hpp
 * @brief Regime of an epsilon sweep from the decay of its final-time metrics.
 *
 * Rules, first match wins:
 *   PressureNoMemory   slope(L1_big_lam) >= 0.2 and slope(L1_p) < 0.1
 *   MemoryNoPressure   slope(L1_p) >= 0.2 and slope(L1_big_lam) < 0.1
 *   MemoryAndPressure  max_mp_residual <= 1e-10 on every completed row and
 *                      slope(excl_p), slope(excl_big_lam) >= 0.2
 *
 * A slope whose fit is degenerate (zeros in the column) counts as neither
 * decaying nor flat.
 */

#include <map>
#include <optional>
#include <string>

#include "congestion/laws.hpp"
#include "congestion/sweep.hpp"

namespace congestion {

inline constexpr double kDecaySlope = 0.2;
inline constexpr double kFlatSlope = 0.1;
inline constexpr double kIdentityTolerance = 1e-10;

struct Classification {
    Regime observed = Regime::MemoryAndPressure;
    Regime expected = Regime::MemoryAndPressure;
    bool agrees = false;
    std::map<std::string, std::optional<double>> slopes;  ///< nullopt: degenerate fit
    double max_mp_residual = 0.0;
    std::string evidence;
};

/// Slopes and identity evidence without a verdict.
Classification collect_evidence(const SweepTable& table, const LawParams& params);

/// Throws ConfigError for a non-epsilon table, SweepDegenerate with fewer
/// than 3 completed rows, Unclassifiable when no rule fires.
Classification classify_limit(const SweepTable& table, const LawParams& params);

}  // namespace congestion
