#pragma once

#include <string>
#include <utility>
#include <vector>

#include "congestion/sweep.hpp"

namespace congestion {

/// metric ~ exp(intercept) * axis^slope, least squares in log-log.
struct RateFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    int points = 0;
};

/// Throws FitDegenerate for fewer than 3 points or any nonpositive value.
RateFit fit_power_law(const std::vector<std::pair<double, double>>& points);

/// fit_power_law over the completed rows of a sweep column (see sweep_column).
RateFit fit_rate(const SweepTable& table, const std::string& metric);

}  // namespace congestion
