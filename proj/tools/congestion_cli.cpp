// Command line front end: simulate, sweep, verify-laws, fit, classify.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "congestion/classify.hpp"
#include "congestion/config.hpp"
#include "congestion/csv.hpp"
#include "congestion/errors.hpp"
#include "congestion/law_battery.hpp"
#include "congestion/rate_fit.hpp"
#include "congestion/simulation.hpp"
#include "congestion/sweep.hpp"

namespace fs = std::filesystem;
using namespace congestion;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kConfig = 2;
constexpr int kSolver = 3;
constexpr int kOverflow = 4;
constexpr int kDisagree = 5;

int exit_code(RunStatus s) {
    switch (s) {
        case RunStatus::Completed: return kOk;
        case RunStatus::SolverFailed: return kSolver;
        case RunStatus::CongestionOverflow: return kOverflow;
    }
    return kFailure;
}

std::vector<double> parse_values(const std::string& text) {
    std::vector<double> out;
    for (const std::string& item : split_csv_line(text)) {
        try {
            std::size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw ConfigError("bad sweep value '" + item + "'");
        }
    }
    return out;
}

void print_classification(std::ostream& out, const Classification& c) {
    out << "observed = " << to_string(c.observed) << '\n';
    out << "expected = " << to_string(c.expected) << '\n';
    out << "agrees = " << (c.agrees ? "yes" : "no") << '\n';
    out << "evidence = " << c.evidence << '\n';
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
    RunConfig config = load_config(config_path);
    config.out_dir = out_dir;
    const RunResult run = run_simulation(config);
    const auto& last = run.trajectory.back();
    std::cout << "status " << to_string(run.status) << ", steps " << run.final_state.step_count << ", t "
              << run.final_state.t << ", max_rho " << last.max_rho << ", meas_099 " << last.meas_099 << '\n';
    if (!run.completed()) std::cerr << run.message << '\n';
    return exit_code(run.status);
}

int cmd_sweep(const std::string& config_path, const std::string& axis_name, const std::string& values_text,
              const std::string& out_dir, int workers, bool expect_theory) {
    const RunConfig config = load_config(config_path);
    const SweepAxis axis = parse_sweep_axis(axis_name);
    SweepOptions opts;
    opts.workers = workers;
    opts.out_dir = out_dir;
    const SweepTable table = sweep(config, axis, parse_values(values_text), opts);
    write_sweep_csv(fs::path(out_dir) / "sweep.csv", table);

    std::ostringstream report;
    report << "axis = " << to_string(axis) << '\n';
    for (const SweepRow& row : table.rows) report << "run " << row.axis_value << " " << to_string(row.status) << '\n';
    const std::vector<std::string> metrics = axis == SweepAxis::Epsilon
                                                 ? std::vector<std::string>{"L1_p", "L1_big_lam", "excl_p", "excl_big_lam"}
                                                 : std::vector<std::string>{"max_meas_1md", "meas_1md"};
    for (const std::string& m : metrics) {
        try {
            const RateFit f = fit_rate(table, m);
            report << "slope " << m << " = " << f.slope << " (r2 " << f.r_squared << ")\n";
        } catch (const FitDegenerate& e) {
            report << "slope " << m << " = degenerate: " << e.what() << '\n';
        }
    }
    int code = kOk;
    if (axis == SweepAxis::Epsilon) {
        try {
            const Classification c = classify_limit(table, config.laws);
            print_classification(report, c);
            if (expect_theory && !c.agrees) code = kDisagree;
        } catch (const Unclassifiable& e) {
            report << "observed = unclassifiable\n" << e.what() << '\n';
            if (expect_theory) code = kDisagree;
        }
    }
    std::ofstream(fs::path(out_dir) / "report.txt") << report.str();
    std::cout << report.str();
    return code;
}

int cmd_verify_laws(int samples, std::uint64_t seed) {
    const LawBatteryReport report = run_law_battery(samples, seed);
    for (const LawCheck& c : report.checks)
        std::cout << (c.passed() ? "PASS " : "FAIL ") << c.name << " samples=" << c.samples
                  << " failures=" << c.failures << " worst=" << c.worst << '\n';
    return report.passed() ? kOk : kFailure;
}

int cmd_fit(const std::string& table_path, const std::string& metric) {
    const RateFit f = fit_rate(read_sweep_csv(fs::path(table_path)), metric);
    std::cout << "slope = " << format_double(f.slope) << "\nintercept = " << format_double(f.intercept)
              << "\nr_squared = " << format_double(f.r_squared) << "\npoints = " << f.points << '\n';
    return kOk;
}

int cmd_classify(const std::string& table_path, const std::string& config_path, bool expect_theory) {
    const SweepTable table = read_sweep_csv(fs::path(table_path));
    LawParams params = table.params;
    if (!config_path.empty()) params = load_config(config_path).laws;
    try {
        const Classification c = classify_limit(table, params);
        print_classification(std::cout, c);
        return expect_theory && !c.agrees ? kDisagree : kOk;
    } catch (const Unclassifiable& e) {
        std::cout << "observed = unclassifiable\n" << e.what() << '\n';
        return expect_theory ? kDisagree : kFailure;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Soft-congestion Brinkman simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, axis, values, table_path, metric;
    int samples = 200, workers = 1;
    std::uint64_t seed = 1;
    bool expect_theory = false;

    auto* sim = app.add_subcommand("simulate", "Run one simulation");
    sim->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    sim->add_option("--out", out_dir, "Output directory")->required();

    auto* sw = app.add_subcommand("sweep", "Run an epsilon or delta sweep");
    sw->add_option("--config", config_path, "Config file")->required()->check(CLI::ExistingFile);
    sw->add_option("--axis", axis, "epsilon or delta")->required();
    sw->add_option("--values", values, "Strictly decreasing comma separated values")->required();
    sw->add_option("--out", out_dir, "Output directory")->required();
    sw->add_option("--workers", workers, "Concurrent runs")->check(CLI::PositiveNumber);
    sw->add_flag("--expect-theory", expect_theory, "Exit 5 if the classified regime disagrees with theory");

    auto* vl = app.add_subcommand("verify-laws", "Run the constitutive law identity battery");
    vl->add_option("--samples", samples, "Random samples per check")->check(CLI::PositiveNumber);
    vl->add_option("--seed", seed, "RNG seed");

    auto* fit = app.add_subcommand("fit", "Log-log rate fit of a sweep.csv column");
    fit->add_option("--table", table_path, "sweep.csv")->required()->check(CLI::ExistingFile);
    fit->add_option("--metric", metric,
                    "Column: L1_p, L1_big_lam, excl_p, excl_big_lam, mp_residual, meas_1md, max_divu_congested "
                    "(final value), or with a final_/max_ prefix")
        ->required();

    auto* cl = app.add_subcommand(
        "classify",
        "Regime of an epsilon sweep. Rules in order: PressureNoMemory if slope(L1_big_lam) >= 0.2 and "
        "slope(L1_p) < 0.1; MemoryNoPressure if slope(L1_p) >= 0.2 and slope(L1_big_lam) < 0.1; "
        "MemoryAndPressure if max mp_residual <= 1e-10 and slope(excl_p), slope(excl_big_lam) >= 0.2");
    cl->add_option("--table", table_path, "sweep.csv")->required()->check(CLI::ExistingFile);
    cl->add_option("--config", config_path, "Take law parameters from this config instead of the table");
    cl->add_flag("--expect-theory", expect_theory, "Exit 5 if the observed regime disagrees with theory");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) return cmd_simulate(config_path, out_dir);
        if (*sw) return cmd_sweep(config_path, axis, values, out_dir, workers, expect_theory);
        if (*vl) return cmd_verify_laws(samples, seed);
        if (*fit) return cmd_fit(table_path, metric);
        if (*cl) return cmd_classify(table_path, config_path, expect_theory);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfig;
    } catch (const SolverDiverged& e) {
        std::cerr << "solver failure: " << e.what() << '\n';
        return kSolver;
    } catch (const CongestionOverflow& e) {
        std::cerr << "congestion overflow: " << e.what() << '\n';
        return kOverflow;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kFailure;
    }
    return kFailure;
}
