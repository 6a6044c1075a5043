#pragma once

/**
 * @file laws.hpp
 * @brief Singular constitutive laws of the soft-congestion Brinkman system.
 *
 * With q = rho / (1 - rho) the exact laws read
 *
 *   p(rho)      = eps * q^gamma
 *   lambda(rho) = eps * q^beta
 *   Lambda(rho) = rho * int_0^rho lambda(s) / s^2 ds
 *               = eps / (beta - 1) * rho^beta / (1 - rho)^(beta - 1)
 *   H(rho)      = rho * int_0^rho p(s) / s^2 ds
 *               = eps / (gamma - 1) * rho^gamma / (1 - rho)^(gamma - 1)
 *   nu(rho)     = 1 / (2 mu + lambda(rho))
 *
 * For delta > 0 every law switches at rho = 1 - delta to a polynomial branch
 * (q replaced by rho / delta) so that evaluation is total on [0, inf).  The
 * branches of H and Lambda carry a linear correction that makes them
 * continuous and keeps rho f' - f equal to p (resp. lambda) on both sides.
 */

#include <string>
#include <string_view>

namespace congestion {

/// Parameters of the constitutive laws and of the momentum operator.
struct LawParams {
    double epsilon = 1e-2;  ///< stiffness scale
    double delta = 0.0;     ///< truncation threshold, 0 selects the exact laws
    double gamma = 2.0;     ///< pressure exponent
    double beta = 3.0;      ///< bulk viscosity exponent
    double mu = 0.1;        ///< shear viscosity
    double r = 1.0;         ///< drag coefficient

    /// Throws ConfigError when an invariant is violated.
    void validate() const;
    [[nodiscard]] bool truncated() const noexcept { return delta > 0.0; }
};

struct LawValues {
    double p = 0.0;
    double lam = 0.0;
    double big_lam = 0.0;
    double h = 0.0;
    double nu = 0.0;
};

/// Limit regime predicted by the sign of 1 + gamma - beta.
enum class Regime { MemoryAndPressure, MemoryNoPressure, PressureNoMemory };

std::string_view to_string(Regime regime) noexcept;
/// Inverse of to_string; throws ConfigError on unknown names.
Regime parse_regime(std::string_view name);

/// Evaluates p, lambda, Lambda, H and nu at one density.
/// Throws DomainError for rho < 0, non-finite rho, or rho >= 1 with exact laws.
LawValues evaluate_laws(double rho, const LawParams& params);

/// rho * p'(rho), the local stiffness of the pressure.  Same domain as
/// evaluate_laws.  On the truncated branch this is gamma * p.
double pressure_stiffness(double rho, const LawParams& params);

Regime regime(const LawParams& params) noexcept;

/// c(beta) = (beta - 1)^(-1 / (beta - 1)).  Obtained by eliminating
/// (1 - rho) between the closed form of Lambda and the product (1 - rho) Lambda.
double constraint3_coefficient(double beta);

/// Absolute residuals of the three algebraic identities of the exact laws,
/// together with the left-hand sides they are measured against.
struct ConstraintResiduals {
    double r1 = 0.0;  ///< Lambda = rho/(beta-1) eps^((1+gamma-beta)/gamma) p^((beta-1)/gamma)
    double r2 = 0.0;  ///< (1-rho) p = eps^(1/gamma) rho p^((gamma-1)/gamma)
    double r3 = 0.0;  ///< (1-rho) Lambda = c(beta) eps^(1/(beta-1)) rho^(beta/(beta-1)) Lambda^((beta-2)/(beta-1))
    double lhs1 = 0.0;
    double lhs2 = 0.0;
    double lhs3 = 0.0;
};

/// Requires 0 < rho < 1 and params.delta == 0, otherwise DomainError.
ConstraintResiduals constraint_residuals(double rho, const LawParams& params);

}  // namespace congestion
