#include "congestion/sweep.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <sstream>

#include "congestion/csv.hpp"
#include "congestion/errors.hpp"

namespace congestion {

std::string to_string(SweepAxis axis) { return axis == SweepAxis::Epsilon ? "epsilon" : "delta"; }

SweepAxis parse_sweep_axis(const std::string& text) {
    if (text == "epsilon") return SweepAxis::Epsilon;
    if (text == "delta") return SweepAxis::Delta;
    throw ConfigError("unknown sweep axis '" + text + "' (expected epsilon or delta)");
}

int SweepTable::completed_rows() const noexcept {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(), [](const SweepRow& r) { return r.completed(); }));
}

namespace {

std::array<double, kSweepMetrics.size()> metrics_of(const DiagnosticsRecord& r) {
    return {r.L1_p, r.L1_big_lam, r.excl_p, r.excl_big_lam, r.mp_residual, r.meas_1md, r.max_divu_congested};
}

RunStatus parse_status(const std::string& s) {
    for (RunStatus st : {RunStatus::Completed, RunStatus::SolverFailed, RunStatus::CongestionOverflow})
        if (to_string(st) == s) return st;
    throw ConfigError("unknown run status '" + s + "'");
}

double parse_number(const std::string& s) {
    try {
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw ConfigError("sweep table: bad number '" + s + "'");
}

std::vector<std::string> header_columns() {
    std::vector<std::string> cols{"axis", "status"};
    for (const char* m : kSweepMetrics) cols.push_back(std::string("final_") + m);
    for (const char* m : kSweepMetrics) cols.push_back(std::string("max_") + m);
    return cols;
}

}  // namespace

SweepRow summarize_run(double axis_value, const RunResult& run) {
    SweepRow row;
    row.axis_value = axis_value;
    row.status = run.status;
    if (!run.completed() || run.trajectory.empty()) return row;
    row.final_values = metrics_of(run.trajectory.back());
    for (const DiagnosticsRecord& r : run.trajectory) {
        const auto m = metrics_of(r);
        for (std::size_t k = 0; k < m.size(); ++k) row.max_values[k] = std::max(row.max_values[k], m[k]);
    }
    return row;
}

SweepTable sweep(const RunConfig& config, SweepAxis axis, const std::vector<double>& values,
                 const SweepOptions& options) {
    if (values.size() < 3) throw ConfigError("a sweep needs at least 3 values");
    for (std::size_t k = 1; k < values.size(); ++k)
        if (!(values[k] < values[k - 1])) throw ConfigError("sweep values must be strictly decreasing");

    std::vector<RunConfig> configs;
    for (double v : values) {
        RunConfig c = config;
        (axis == SweepAxis::Epsilon ? c.laws.epsilon : c.laws.delta) = v;
        if (!options.out_dir.empty()) c.out_dir = options.out_dir / (to_string(axis) + "_" + format_double(v));
        else c.out_dir.clear();
        c.validate();
        configs.push_back(std::move(c));
    }

    SweepTable table;
    table.axis = axis;
    table.params = config.laws;
    table.rows.resize(values.size());

    auto run_one = [&](std::size_t k) { return summarize_run(values[k], run_simulation(configs[k])); };
    const std::size_t workers = static_cast<std::size_t>(std::max(1, options.workers));
    for (std::size_t start = 0; start < values.size(); start += workers) {
        const std::size_t stop = std::min(values.size(), start + workers);
        std::vector<std::future<SweepRow>> pending;
        for (std::size_t k = start + 1; k < stop; ++k) pending.push_back(std::async(std::launch::async, run_one, k));
        table.rows[start] = run_one(start);
        for (std::size_t k = start + 1; k < stop; ++k) table.rows[k] = pending[k - start - 1].get();
    }

    if (table.completed_rows() < 3)
        throw SweepDegenerate("only " + std::to_string(table.completed_rows()) + " of " +
                              std::to_string(values.size()) + " sweep runs completed");
    return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
    const LawParams& p = table.params;
    out << "# axis=" << to_string(table.axis) << " epsilon=" << format_double(p.epsilon)
        << " delta=" << format_double(p.delta) << " gamma=" << format_double(p.gamma)
        << " beta=" << format_double(p.beta) << " mu=" << format_double(p.mu) << " r=" << format_double(p.r) << '\n';
    out << join_csv(header_columns()) << '\n';
    for (const SweepRow& row : table.rows) {
        std::vector<std::string> f{format_double(row.axis_value), to_string(row.status)};
        for (double v : row.final_values) f.push_back(format_double(v));
        for (double v : row.max_values) f.push_back(format_double(v));
        out << join_csv(f) << '\n';
    }
}

void write_sweep_csv(const std::filesystem::path& path, const SweepTable& table) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path);
    if (!out) throw ConfigError("cannot write " + path.string());
    write_sweep_csv(out, table);
}

SweepTable read_sweep_csv(std::istream& in) {
    SweepTable table;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw ConfigError("sweep table: missing '# axis=' line");
    {
        std::istringstream meta(line.substr(2));
        std::string item;
        bool have_axis = false;
        while (meta >> item) {
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw ConfigError("sweep table: bad header item '" + item + "'");
            const std::string key = item.substr(0, eq), value = item.substr(eq + 1);
            if (key == "axis") {
                table.axis = parse_sweep_axis(value);
                have_axis = true;
            } else if (key == "epsilon") table.params.epsilon = parse_number(value);
            else if (key == "delta") table.params.delta = parse_number(value);
            else if (key == "gamma") table.params.gamma = parse_number(value);
            else if (key == "beta") table.params.beta = parse_number(value);
            else if (key == "mu") table.params.mu = parse_number(value);
            else if (key == "r") table.params.r = parse_number(value);
            else throw ConfigError("sweep table: unknown header key '" + key + "'");
        }
        if (!have_axis) throw ConfigError("sweep table: header has no axis");
    }
    if (!std::getline(in, line) || split_csv_line(line) != header_columns())
        throw ConfigError("sweep table: unexpected column header");
    const std::size_t m = kSweepMetrics.size();
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 2 + 2 * m) throw ConfigError("sweep table: row has " + std::to_string(f.size()) + " fields");
        SweepRow row;
        row.axis_value = parse_number(f[0]);
        row.status = parse_status(f[1]);
        for (std::size_t k = 0; k < m; ++k) {
            row.final_values[k] = parse_number(f[2 + k]);
            row.max_values[k] = parse_number(f[2 + m + k]);
        }
        table.rows.push_back(row);
    }
    return table;
}

SweepTable read_sweep_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read " + path.string());
    return read_sweep_csv(in);
}

std::vector<std::pair<double, double>> sweep_column(const SweepTable& table, const std::string& metric) {
    bool use_max = false;
    std::string name = metric;
    if (name.rfind("final_", 0) == 0) name = name.substr(6);
    else if (name.rfind("max_", 0) == 0 && name != "max_divu_congested") {
        use_max = true;
        name = name.substr(4);
    }
    const auto it = std::find(kSweepMetrics.begin(), kSweepMetrics.end(), name);
    if (it == kSweepMetrics.end()) throw ConfigError("unknown sweep metric '" + metric + "'");
    const auto k = static_cast<std::size_t>(it - kSweepMetrics.begin());
    std::vector<std::pair<double, double>> out;
    for (const SweepRow& row : table.rows)
        if (row.completed()) out.emplace_back(row.axis_value, use_max ? row.max_values[k] : row.final_values[k]);
    return out;
}

}  // namespace congestion
