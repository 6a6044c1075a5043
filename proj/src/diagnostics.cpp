#include "congestion/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "congestion/csv.hpp"

namespace congestion {

LawFields evaluate_law_fields(const ScalarField& rho, const LawParams& params) {
    LawFields out(rho.grid());
    for (std::size_t k = 0; k < rho.size(); ++k) {
        const LawValues v = evaluate_laws(rho[k], params);
        out.p[k] = v.p;
        out.lam[k] = v.lam;
        out.big_lam[k] = v.big_lam;
        out.h[k] = v.h;
        out.nu[k] = v.nu;
    }
    return out;
}

const std::vector<std::string>& diagnostics_columns() {
    static const std::vector<std::string> columns{
        "step",         "t",          "dt",          "mass",      "min_rho",     "max_rho",       "energy_H",
        "dissipation",  "forcing_power", "flux_residual", "mean_relation_residual", "L1_p", "L1_lambda",
        "L1_big_lam",   "excl_p",     "excl_big_lam", "mp_residual", "meas_099",  "meas_1md",
        "max_divu_congested"};
    return columns;
}

std::string diagnostics_csv_header() { return join_csv(diagnostics_columns()); }

std::string to_csv_row(const DiagnosticsRecord& r) {
    std::vector<std::string> f{std::to_string(r.step)};
    for (double v : {r.t, r.dt, r.mass, r.min_rho, r.max_rho, r.energy_H, r.dissipation, r.forcing_power,
                     r.flux_residual, r.mean_relation_residual, r.L1_p, r.L1_lambda, r.L1_big_lam, r.excl_p,
                     r.excl_big_lam, r.mp_residual, r.meas_099, r.meas_1md, r.max_divu_congested})
        f.push_back(format_double(v));
    return join_csv(f);
}

namespace {

double sum(const ScalarField& s) {
    double acc = 0.0;
    for (double v : s.values()) acc += v;
    return acc;
}

EffectiveFluxReport flux_report(const SimState& state, const LawFields& laws, const FaceVectorField& f,
                                const LawParams& params, const SolverOptions& opts) {
    const Grid& g = state.rho.grid();
    const ScalarField divu = divergence(state.u);
    EffectiveFluxReport rep{ScalarField(g), compute_S(state.u, f, params, opts)};
    for (std::size_t k = 0; k < divu.size(); ++k) rep.F[k] = (2.0 * params.mu + laws.lam[k]) * divu[k] - laws.p[k];

    const double mean_f = mean(rep.F);
    double worst = 0.0;
    for (std::size_t k = 0; k < divu.size(); ++k) worst = std::max(worst, std::abs(rep.F[k] - mean_f - rep.S[k]));
    rep.flux_residual = worst;

    double lam_divu = 0.0, p_sum = 0.0, weighted = 0.0, nu_sum = 0.0;
    for (std::size_t k = 0; k < divu.size(); ++k) {
        lam_divu += laws.lam[k] * divu[k];
        p_sum += laws.p[k];
        weighted += (laws.p[k] + rep.S[k]) * laws.nu[k];
        nu_sum += laws.nu[k];
    }
    const double cells = static_cast<double>(divu.size());
    rep.mean_relation_residual = std::abs(lam_divu / cells - p_sum / cells + weighted / nu_sum);
    return rep;
}

CongestionReport congestion_from(const SimState& state, const LawFields& laws, const ScalarField& divu,
                                 const LawParams& params, double theta) {
    const Grid& g = state.rho.grid();
    const double vol = g.cell_volume();
    const double adapted = 1.0 - std::pow(params.epsilon, 1.0 / (params.gamma + 1.0));
    CongestionReport rep;
    for (std::size_t k = 0; k < state.rho.size(); ++k) {
        const double rho = state.rho[k];
        rep.excl_p += (1.0 - rho) * laws.p[k];
        rep.excl_big_lam += (1.0 - rho) * laws.big_lam[k];
        if (rho >= theta) {
            rep.meas_theta += vol;
            rep.mp_residual = std::max(rep.mp_residual, std::abs(rho * laws.p[k] - (params.beta - 1.0) * laws.big_lam[k]));
            rep.max_divu_congested = std::max(rep.max_divu_congested, std::abs(divu[k]));
        }
        if (rho >= 1.0 - params.delta) rep.meas_1md += vol;
        if (rho >= adapted) rep.meas_adapted += vol;
    }
    rep.excl_p *= vol;
    rep.excl_big_lam *= vol;
    return rep;
}

EnergyTerms energy_from(const SimState& state, const LawFields& laws, const ScalarField& divu,
                        const FaceVectorField& f, const LawParams& params) {
    const Grid& g = state.rho.grid();
    const double vol = g.cell_volume();
    EnergyTerms e;
    e.energy_H = sum(laws.h) * vol;
    for (std::size_t k = 0; k < divu.size(); ++k) {
        e.div_sq += divu[k] * divu[k];
        e.lam_div_sq += laws.lam[k] * divu[k] * divu[k];
    }
    const NodeField w_field = curl(state.u);
    for (double w : w_field.values()) e.curl_sq += w * w;
    for (double v : state.u.values()) e.u_sq += v * v;
    e.div_sq *= vol;
    e.lam_div_sq *= vol;
    e.curl_sq *= vol;
    e.u_sq *= vol;
    e.dissipation = 2.0 * params.mu * e.div_sq + e.lam_div_sq + params.mu * e.curl_sq + params.r * e.u_sq;
    e.forcing_power = inner(f, state.u);
    return e;
}

}  // namespace

EffectiveFluxReport effective_flux_report(const SimState& state, const FaceVectorField& f, const LawParams& params,
                                          const SolverOptions& opts) {
    return flux_report(state, evaluate_law_fields(state.rho, params), f, params, opts);
}

CongestionReport congestion_report(const SimState& state, const LawParams& params, double theta) {
    return congestion_from(state, evaluate_law_fields(state.rho, params), divergence(state.u), params, theta);
}

EnergyTerms energy_terms(const SimState& state, const FaceVectorField& f, const LawParams& params) {
    return energy_from(state, evaluate_law_fields(state.rho, params), divergence(state.u), f, params);
}

DiagnosticsRecord make_record(const SimState& state, const FaceVectorField& f, const LawParams& params,
                              const SolverOptions& opts, double dt) {
    const LawFields laws = evaluate_law_fields(state.rho, params);
    const ScalarField divu = divergence(state.u);
    const double vol = state.rho.grid().cell_volume();

    DiagnosticsRecord r;
    r.step = state.step_count;
    r.t = state.t;
    r.dt = dt;
    const auto rho = state.rho.values();
    r.mass = sum(state.rho) * vol;
    r.min_rho = *std::min_element(rho.begin(), rho.end());
    r.max_rho = *std::max_element(rho.begin(), rho.end());

    const EnergyTerms e = energy_from(state, laws, divu, f, params);
    r.energy_H = e.energy_H;
    r.dissipation = e.dissipation;
    r.forcing_power = e.forcing_power;
    r.div_sq = e.div_sq;
    r.lam_div_sq = e.lam_div_sq;
    r.curl_sq = e.curl_sq;
    r.u_sq = e.u_sq;

    const EffectiveFluxReport flux = flux_report(state, laws, f, params, opts);
    r.flux_residual = flux.flux_residual;
    r.mean_relation_residual = flux.mean_relation_residual;

    r.L1_p = sum(laws.p) * vol;
    r.L1_lambda = sum(laws.lam) * vol;
    r.L1_big_lam = sum(laws.big_lam) * vol;

    const CongestionReport c = congestion_from(state, laws, divu, params, kCongestedThreshold);
    r.excl_p = c.excl_p;
    r.excl_big_lam = c.excl_big_lam;
    r.mp_residual = c.mp_residual;
    r.meas_099 = c.meas_theta;
    r.meas_1md = c.meas_1md;
    r.meas_adapted = c.meas_adapted;
    r.max_divu_congested = c.max_divu_congested;

    double drift = 0.0;
    for (std::size_t k = 0; k < state.big_lam.size(); ++k) drift += std::abs(state.big_lam[k] - laws.big_lam[k]);
    r.big_lam_drift = drift * vol;
    return r;
}

}  // namespace congestion
