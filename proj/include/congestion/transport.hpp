#pragma once

/**
 * @file transport.hpp
 * @brief Conservative first-order upwind transport of rho and of the
 *        renormalised quantity Lambda, plus time step control.
 *
 * Face flux = u_face * (upwind cell value); the cell update is
 * rho - dt * div(flux).  Mass is conserved by telescoping and the update is
 * a convex combination of neighbouring values for dt <= stable_dt, so
 * nonnegativity is preserved.
 */

#include <cstdint>

#include "congestion/grid.hpp"
#include "congestion/laws.hpp"

namespace congestion {

struct StepControl {
    double cfl = 0.4;
    double dt_min = 1e-12;
    int max_halvings = 20;

    void validate() const;
};

/// One time level of a trajectory.
struct SimState {
    explicit SimState(const Grid& grid) : rho(grid), u(grid), big_lam(grid) {}

    double t = 0.0;
    ScalarField rho;
    FaceVectorField u;
    ScalarField big_lam;  ///< Lambda integrated by its own transport equation
    std::int64_t step_count = 0;
};

/// cfl * dx / (dim * max(|u|, 1e-14)).
double stable_dt(const FaceVectorField& u, const Grid& grid, const StepControl& ctrl);

/// cfl / max(rho p'(rho) nu(rho)): the explicit limit of the local pressure
/// relaxation rho_t ~ -rho nu (p - <.>) that the lagged velocity cannot see.
/// Returns +inf when the pressure is flat everywhere.
double relaxation_dt(const ScalarField& rho, const LawParams& params, const StepControl& ctrl);

/// Single upwind step.  Throws CongestionOverflow if the exact laws are in
/// use and any updated cell reaches rho >= 1.
ScalarField advect_density(const ScalarField& rho, const FaceVectorField& u, double dt, const LawParams& params);

struct DensityStep {
    ScalarField rho;
    double dt = 0.0;  ///< the step actually taken
    int halvings = 0;
};

/// advect_density with dt halving on CongestionOverflow, at most
/// ctrl.max_halvings times and never below ctrl.dt_min; rethrows after that.
DensityStep advect_density_adaptive(const ScalarField& rho, const FaceVectorField& u, double dt,
                                    const LawParams& params, const StepControl& ctrl);

/// Upwind step of d_t Lambda + div(Lambda u) = -lambda div u.
ScalarField advect_big_lambda(const ScalarField& big_lam, const FaceVectorField& u, const ScalarField& divu,
                              const ScalarField& lam, double dt);

}  // namespace congestion
