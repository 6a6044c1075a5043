#include <algorithm>
#include <cmath>
#include <cstdint>

#include "congestion/diagnostics.hpp"

namespace congestion {

double poincare_constant(const Grid& grid, const SolverOptions& opts) {
    // Deterministic start vector with components on every Fourier mode.
    ScalarField v(grid);
    std::uint64_t state = 0x9E3779B97F4A7C15ull;
    for (auto& x : v.values()) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        x = static_cast<double>(state % 100000) / 100000.0 - 0.5;
    }
    const double m = mean(v);
    for (auto& x : v.values()) x -= m;

    // Inverse iteration: v <- (-Delta_h)^{-1} v, Rayleigh quotient of -Delta_h.
    double eigenvalue = 0.0;
    for (int it = 0; it < 200; ++it) {
        const double norm = std::sqrt(inner(v, v));
        for (auto& x : v.values()) x /= norm;
        ScalarField w = solve_poisson_zero_mean(v, opts);
        const double next = inner(v, v) / inner(v, w);  // <v, v> / <v, A^-1 v>
        v = std::move(w);
        if (it > 0 && std::abs(next - eigenvalue) <= 1e-13 * next) {
            eigenvalue = next;
            break;
        }
        eigenvalue = next;
    }
    return 1.0 / eigenvalue;
}

EnergyLedger energy_report(const std::vector<DiagnosticsRecord>& records, const LawParams& params,
                           const EnergyInputs& inputs) {
    EnergyLedger ledger;
    ledger.poincare_constant = inputs.poincare_constant;
    if (records.empty()) return ledger;

    const double e0 = records.front().energy_H;
    const double bound_rate = (1.0 + inputs.poincare_constant) / (2.0 * params.mu) * inputs.forcing_l2_sq;
    double diss = 0.0, forcing = 0.0, bound_diss = 0.0, sup_energy = e0, elapsed = 0.0;
    double previous_drift = 0.0;

    for (std::size_t n = 0; n < records.size(); ++n) {
        const DiagnosticsRecord& r = records[n];
        EnergyLedgerEntry entry;
        entry.t = r.t;
        entry.energy = r.energy_H;
        entry.cumulative_dissipation = diss;
        entry.cumulative_forcing = forcing;
        entry.drift = r.energy_H + diss - e0 - forcing;
        sup_energy = std::max(sup_energy, r.energy_H);
        entry.bound_lhs = sup_energy + bound_diss;
        entry.bound_rhs = e0 + bound_rate * elapsed;
        if (entry.bound_lhs > entry.bound_rhs * (1.0 + 1e-12) + 1e-14) ledger.energy_bound_holds = false;

        if (n > 0) {
            const DiagnosticsRecord& prev = records[n - 1];
            const double allowance =
                10.0 * prev.dt * (prev.dt + inputs.dx) * (1.0 + prev.dissipation + std::abs(prev.forcing_power));
            if (entry.drift - previous_drift > allowance) {
                entry.violation = true;
                ++ledger.violations;
            }
        }
        previous_drift = entry.drift;
        ledger.max_abs_drift = std::max(ledger.max_abs_drift, std::abs(entry.drift));
        ledger.entries.push_back(entry);

        diss += r.dt * r.dissipation;
        forcing += r.dt * r.forcing_power;
        bound_diss += r.dt * ((1.5 * params.mu) * r.div_sq + r.lam_div_sq + 0.5 * params.mu * r.curl_sq +
                              params.r * r.u_sq);
        elapsed += r.dt;
    }
    ledger.final_drift = ledger.entries.back().drift;
    return ledger;
}

}  // namespace congestion
