#pragma once

/**
 * @file scenario.hpp
 * @brief Built-in initial data and forcing.
 *
 *   equilibrium       rho0 = scenario.rho0 (0.3), f = 0
 *   compression       rho0 = scenario.rho0 (0.6), f_x = F0 sin(2 pi x / L), F0 = scenario.F0 (5)
 *   two-bump          1D; rho0 = base + amplitude (g(x - L/4) + g(x - 3L/4)), g Gaussian of
 *                     scenario.width; f_x = F0 sin(2 pi x / L) pushes both bumps to L/2
 *                     (base 0.1, amplitude 0.5, width 0.06, F0 5)
 *   rotation-squeeze  2D; rho0 = rho0 + perturbation cos(2 pi x/L) cos(2 pi y/L),
 *                     f = F0 (sin(2 pi x/L), sin(2 pi y/L))
 *                       + Frot (sin(2 pi x/L) cos(2 pi y/L), -cos(2 pi x/L) sin(2 pi y/L))
 *                     (rho0 0.5, perturbation 0.05, F0 3, Frot 3)
 *
 * Forcing is time independent.
 */

#include <string>
#include <vector>

#include "congestion/grid.hpp"

namespace congestion {

struct RunConfig;

struct ScenarioData {
    ScalarField rho0;
    FaceVectorField force;
};

const std::vector<std::string>& scenario_ids();

/// Throws ConfigError for unknown ids, unknown scenario keys or a dimension
/// the scenario does not support.
void check_scenario(const RunConfig& config);

/// Builds the initial density and forcing.  Throws ConfigError unless
/// 0 <= rho0 <= max rho0 < 1 and mean(rho0) < 1.
ScenarioData build_scenario(const RunConfig& config);

}  // namespace congestion
