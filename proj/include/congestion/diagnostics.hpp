#pragma once

/**
 * @file diagnostics.hpp
 * @brief Per-step checkable quantities: effective flux identities, energy
 *        terms, exclusion residuals and congested-set measures.
 *
 * All integrals are midpoint sums times dx^dim.
 */

#include <cstdint>
#include <string>
#include <vector>

#include "congestion/grid.hpp"
#include "congestion/laws.hpp"
#include "congestion/momentum.hpp"
#include "congestion/transport.hpp"

namespace congestion {

/// Law values evaluated cell by cell.
struct LawFields {
    explicit LawFields(const Grid& grid) : p(grid), lam(grid), big_lam(grid), h(grid), nu(grid) {}
    ScalarField p, lam, big_lam, h, nu;
};

/// Throws DomainError if any cell is outside the law domain.
LawFields evaluate_law_fields(const ScalarField& rho, const LawParams& params);

/// Fixed threshold of the congested set used for eps-independent reporting.
inline constexpr double kCongestedThreshold = 0.99;

struct DiagnosticsRecord {
    std::int64_t step = 0;
    double t = 0.0;
    double dt = 0.0;
    double mass = 0.0;
    double min_rho = 0.0;
    double max_rho = 0.0;
    double energy_H = 0.0;
    double dissipation = 0.0;
    double forcing_power = 0.0;
    double flux_residual = 0.0;
    double mean_relation_residual = 0.0;
    double L1_p = 0.0;
    double L1_lambda = 0.0;
    double L1_big_lam = 0.0;
    double excl_p = 0.0;
    double excl_big_lam = 0.0;
    double mp_residual = 0.0;
    double meas_099 = 0.0;
    double meas_1md = 0.0;
    double max_divu_congested = 0.0;

    // Not part of diagnostics.csv.
    double div_sq = 0.0;          ///< sum (div u)^2
    double lam_div_sq = 0.0;      ///< sum lambda (div u)^2
    double curl_sq = 0.0;         ///< sum (curl u)^2
    double u_sq = 0.0;            ///< sum |u|^2
    double meas_adapted = 0.0;    ///< |{rho >= 1 - eps^(1/(gamma+1))}|
    double big_lam_drift = 0.0;   ///< || Lambda_transported - Lambda(rho) ||_L1
    int solver_iterations = 0;
    int halvings = 0;
};

/// Column names of diagnostics.csv, in order.
const std::vector<std::string>& diagnostics_columns();
std::string diagnostics_csv_header();
std::string to_csv_row(const DiagnosticsRecord& record);

struct EffectiveFluxReport {
    ScalarField F;
    ScalarField S;
    double flux_residual = 0.0;           ///< || F - <F> - S ||_inf
    double mean_relation_residual = 0.0;  ///< | <lam div u> - <p> + int (p+S) nu / int nu |
};

EffectiveFluxReport effective_flux_report(const SimState& state, const FaceVectorField& f, const LawParams& params,
                                          const SolverOptions& opts);

struct CongestionReport {
    double excl_p = 0.0;
    double excl_big_lam = 0.0;
    double mp_residual = 0.0;  ///< max over {rho >= theta} of |rho p - (beta - 1) Lambda|
    double meas_theta = 0.0;
    double meas_1md = 0.0;     ///< |{rho >= 1 - delta}| (zero set for delta = 0)
    double meas_adapted = 0.0;
    double max_divu_congested = 0.0;  ///< 0 on an empty congested set
};

CongestionReport congestion_report(const SimState& state, const LawParams& params,
                                   double theta = kCongestedThreshold);

struct EnergyTerms {
    double energy_H = 0.0;
    double div_sq = 0.0;
    double lam_div_sq = 0.0;
    double curl_sq = 0.0;
    double u_sq = 0.0;
    double dissipation = 0.0;  ///< 2 mu div_sq + lam_div_sq + mu curl_sq + r u_sq
    double forcing_power = 0.0;
};

EnergyTerms energy_terms(const SimState& state, const FaceVectorField& f, const LawParams& params);

/// Full record of one time level (state.u must solve the momentum equation).
DiagnosticsRecord make_record(const SimState& state, const FaceVectorField& f, const LawParams& params,
                              const SolverOptions& opts, double dt);

/// 1 / lambda_1(-Delta_h) on the mean-zero subspace, by inverse power iteration.
double poincare_constant(const Grid& grid, const SolverOptions& opts);

struct EnergyLedgerEntry {
    double t = 0.0;
    double energy = 0.0;
    double cumulative_dissipation = 0.0;  ///< sum of dt * dissipation over completed steps
    double cumulative_forcing = 0.0;
    double drift = 0.0;  ///< E(t) + cumulative_dissipation - E(0) - cumulative_forcing
    double bound_lhs = 0.0;  ///< sup E + int [(3/2 mu + lam)(div u)^2 + mu/2 |curl u|^2 + r |u|^2]
    double bound_rhs = 0.0;  ///< E(0) + (1 + C)/(2 mu) int ||f||^2
    bool violation = false;  ///< step created energy beyond the scheme-error allowance
};

struct EnergyLedger {
    std::vector<EnergyLedgerEntry> entries;
    double poincare_constant = 0.0;
    double final_drift = 0.0;
    double max_abs_drift = 0.0;
    bool energy_bound_holds = true;
    int violations = 0;
};

struct EnergyInputs {
    double dx = 0.0;
    double forcing_l2_sq = 0.0;  ///< ||f||^2_{L^2} (time independent forcing)
    double poincare_constant = 0.0;
};

/// Balance ledger over a trajectory.  A step is flagged when its drift
/// increment exceeds 10 dt (dt + dx) (1 + dissipation + |forcing_power|).
EnergyLedger energy_report(const std::vector<DiagnosticsRecord>& records, const LawParams& params,
                           const EnergyInputs& inputs);

}  // namespace congestion
