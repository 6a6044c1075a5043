#include "congestion/simulation.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

#include "congestion/csv.hpp"
#include "congestion/errors.hpp"
#include "congestion/momentum.hpp"
#include "congestion/scenario.hpp"
#include "congestion/snapshot.hpp"

namespace congestion {

namespace fs = std::filesystem;

std::string to_string(RunStatus status) {
    switch (status) {
        case RunStatus::Completed: return "completed";
        case RunStatus::SolverFailed: return "solver_failed";
        case RunStatus::CongestionOverflow: return "congestion_overflow";
    }
    return "unknown";
}

namespace {

class RunOutput {
public:
    explicit RunOutput(const fs::path& dir) : dir_(dir) {
        if (dir_.empty()) return;
        fs::create_directories(dir_ / "snapshots");
        csv_.open(dir_ / "diagnostics.csv");
        if (!csv_) throw ConfigError("cannot write " + (dir_ / "diagnostics.csv").string());
        csv_ << diagnostics_csv_header() << '\n';
    }

    [[nodiscard]] bool enabled() const { return !dir_.empty(); }

    void record(const DiagnosticsRecord& r) {
        if (enabled()) csv_ << to_csv_row(r) << '\n' << std::flush;
    }

    void snapshot(const SimState& s) {
        if (!enabled()) return;
        std::ostringstream tag;
        tag << "step" << std::setw(8) << std::setfill('0') << s.step_count;
        const fs::path d = dir_ / "snapshots";
        write_snapshot(d / (tag.str() + "_rho.txt"), make_snapshot(s.rho, s.t, "rho"));
        write_snapshot(d / (tag.str() + "_big_lam.txt"), make_snapshot(s.big_lam, s.t, "big_lam"));
        write_snapshot(d / (tag.str() + "_ux.txt"), make_snapshot(s.u, 0, s.t, "ux"));
        if (s.rho.grid().dim == 2) write_snapshot(d / (tag.str() + "_uy.txt"), make_snapshot(s.u, 1, s.t, "uy"));
    }

    void report(const RunConfig& config, const RunResult& result) {
        if (!enabled()) return;
        std::ofstream out(dir_ / "report.txt");
        out << "status = " << to_string(result.status) << '\n';
        if (!result.message.empty()) out << "message = " << result.message << '\n';
        out << "steps = " << result.final_state.step_count << '\n';
        out << "t = " << format_double(result.final_state.t) << '\n';
        out << "regime = " << to_string(regime(config.laws)) << '\n';
        if (result.trajectory.empty()) return;
        const DiagnosticsRecord& last = result.trajectory.back();
        out << "max_rho = " << format_double(last.max_rho) << '\n';
        out << "meas_099 = " << format_double(last.meas_099) << '\n';
        const EnergyLedger ledger = energy_ledger(config, result.trajectory);
        out << "poincare_constant = " << format_double(ledger.poincare_constant) << '\n';
        out << "energy_final_drift = " << format_double(ledger.final_drift) << '\n';
        out << "energy_max_abs_drift = " << format_double(ledger.max_abs_drift) << '\n';
        out << "energy_step_violations = " << ledger.violations << '\n';
        out << "energy_bound_holds = " << (ledger.energy_bound_holds ? "yes" : "no") << '\n';
        out << "\n# config\n" << to_config_text(config);
    }

private:
    fs::path dir_;
    std::ofstream csv_;
};

}  // namespace

EnergyLedger energy_ledger(const RunConfig& config, const std::vector<DiagnosticsRecord>& trajectory) {
    const Grid grid = config.grid();
    const ScenarioData data = build_scenario(config);
    EnergyInputs inputs;
    inputs.dx = grid.dx;
    inputs.forcing_l2_sq = inner(data.force, data.force);
    // a property of the grid alone, so the run's iteration cap does not apply
    SolverOptions opts;
    opts.tol = config.solver.tol;
    inputs.poincare_constant = poincare_constant(grid, opts);
    return energy_report(trajectory, config.laws, inputs);
}

RunResult run_simulation(const RunConfig& config) {
    config.validate();
    const Grid grid = config.grid();
    const ScenarioData data = build_scenario(config);
    const LawParams& params = config.laws;

    SimState state(grid);
    state.rho = data.rho0;
    state.big_lam = evaluate_law_fields(state.rho, params).big_lam;

    RunResult result{state, {}, RunStatus::Completed, {}};
    RunOutput out(config.out_dir);
    const double t_tol = 1e-12 * config.t_end;

    auto fail = [&](RunStatus status, const std::string& msg) {
        result.status = status;
        result.message = msg;
    };

    std::optional<FaceVectorField> warm;
    while (true) {
        try {
            MomentumSolution sol = solve_momentum(state.rho, data.force, params, config.solver, warm ? &*warm : nullptr);
            state.u = std::move(sol.u);
            warm = state.u;

            const bool last = state.t >= config.t_end - t_tol;
            double dt = 0.0;
            if (!last) {
                dt = std::min({stable_dt(state.u, grid, config.step), relaxation_dt(state.rho, params, config.step),
                               config.t_end - state.t});
            }
            DiagnosticsRecord rec = make_record(state, data.force, params, config.solver, dt);
            rec.solver_iterations = sol.report.iterations;

            if (config.snapshot_every > 0 && state.step_count % config.snapshot_every == 0 && !last)
                out.snapshot(state);
            if (last) {
                result.trajectory.push_back(rec);
                out.record(rec);
                out.snapshot(state);
                break;
            }

            const ScalarField divu = divergence(state.u);
            const ScalarField lam = evaluate_law_fields(state.rho, params).lam;
            DensityStep step = advect_density_adaptive(state.rho, state.u, dt, params, config.step);
            rec.dt = step.dt;
            rec.halvings = step.halvings;
            result.trajectory.push_back(rec);
            out.record(rec);

            state.big_lam = advect_big_lambda(state.big_lam, state.u, divu, lam, step.dt);
            state.rho = std::move(step.rho);
            state.t = (config.t_end - state.t - step.dt <= t_tol) ? config.t_end : state.t + step.dt;
            ++state.step_count;
        } catch (const SolverDiverged& e) {
            fail(RunStatus::SolverFailed, e.what());
            break;
        } catch (const CongestionOverflow& e) {
            fail(RunStatus::CongestionOverflow, e.what());
            break;
        } catch (const DomainError& e) {
            fail(RunStatus::CongestionOverflow, e.what());
            break;
        }
    }
    result.final_state = state;
    out.report(config, result);
    return result;
}

}  // namespace congestion
