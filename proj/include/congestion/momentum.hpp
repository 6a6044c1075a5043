#pragma once

/**
 * @file momentum.hpp
 * @brief Semi-stationary momentum solve and the zero-mean periodic Poisson
 *        problem of the effective-flux decomposition.
 *
 * The momentum operator is assembled from its quadratic form
 *
 *   <A u, psi> = sum (2 mu + lambda(rho)) div u div psi
 *              + sum mu curl u curl psi + sum r u . psi        (all times dx^dim)
 *
 * i.e. A = -G K D + mu C^T C + r I with D = divergence, G = gradient = -D^T,
 * C = node curl and K = diag(2 mu + lambda).  A is symmetric positive definite
 * for r > 0 and the system A u = f - G p is solved by preconditioned CG.
 */

#include <optional>
#include <span>
#include <vector>

#include "congestion/errors.hpp"
#include "congestion/grid.hpp"
#include "congestion/laws.hpp"

namespace congestion {

enum class Preconditioner { None, Diagonal };

struct SolverOptions {
    double tol = 1e-10;  ///< relative residual target ||b - A x|| / ||b||
    int max_iter = 0;    ///< 0 selects the default 50 * n * dim
    Preconditioner preconditioner = Preconditioner::Diagonal;

    void validate() const;
    [[nodiscard]] int iteration_limit(const Grid& grid) const noexcept;
};

struct SolveReport {
    int iterations = 0;
    double final_relative_residual = 0.0;
    bool converged = false;
};

/// CG hit its iteration limit; carries the report of the failed solve.
class SolverDiverged : public Error {
public:
    SolverDiverged(const std::string& what, SolveReport report) : Error(what), report_(report) {}
    [[nodiscard]] const SolveReport& report() const noexcept { return report_; }

private:
    SolveReport report_;
};

class MomentumOperator {
public:
    /// kappa = 2 mu + lambda(rho) per cell.
    MomentumOperator(const ScalarField& rho, const LawParams& params);
    MomentumOperator(const Grid& grid, std::vector<double> kappa, double mu, double r);

    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    void apply(std::span<const double> u, std::span<double> out) const;
    [[nodiscard]] FaceVectorField apply(const FaceVectorField& u) const;
    [[nodiscard]] std::vector<double> diagonal() const;
    /// <A psi, psi> including the dx^dim weight.
    [[nodiscard]] double quadratic_form(const FaceVectorField& psi) const;

private:
    Grid grid_;
    std::vector<double> kappa_;
    double mu_;
    double r_;
};

struct MomentumSolution {
    FaceVectorField u;
    SolveReport report;
};

/// Solves A(rho) u = f - gradient(p(rho)).  initial_guess warm-starts CG.
/// Throws SolverDiverged, or DomainError when the laws cannot be evaluated on rho.
MomentumSolution solve_momentum(const ScalarField& rho, const FaceVectorField& f, const LawParams& params,
                                const SolverOptions& opts, const FaceVectorField* initial_guess = nullptr);

/// Solves -D G s = g with mean(s) = 0.  Requires |mean g| <= 1e-10 ||g||_inf
/// (CompatibilityError otherwise).
ScalarField solve_poisson_zero_mean(const ScalarField& g, const SolverOptions& opts,
                                    SolveReport* report = nullptr);

/// S = (-Delta_h)^{-1} div(f - r u), zero mean, so that the effective flux
/// satisfies F = <F> + S for a solution of the momentum equation.
ScalarField compute_S(const FaceVectorField& u, const FaceVectorField& f, const LawParams& params,
                      const SolverOptions& opts);

}  // namespace congestion
