#include "congestion/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "congestion/csv.hpp"
#include "congestion/errors.hpp"
#include "congestion/scenario.hpp"

namespace congestion {

double ScenarioSelection::get(const std::string& key, double fallback) const {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void RunConfig::validate() const {
    (void)grid();
    laws.validate();
    step.validate();
    solver.validate();
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be > 0");
    if (snapshot_every < 0) throw ConfigError("snapshot_every must be >= 0");
    check_scenario(*this);
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double to_number(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "' expects a number, got '" + value + "'");
    }
}

int to_int(const std::string& key, const std::string& value) {
    const double v = to_number(key, value);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("config key '" + key + "' expects an integer");
    return static_cast<int>(v);
}

}  // namespace

RunConfig parse_config(std::istream& in) {
    RunConfig c;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(line_no) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (key == "dim") c.dim = to_int(key, value);
        else if (key == "n") c.n = to_int(key, value);
        else if (key == "length") c.length = to_number(key, value);
        else if (key == "t_end") c.t_end = to_number(key, value);
        else if (key == "cfl") c.step.cfl = to_number(key, value);
        else if (key == "epsilon") c.laws.epsilon = to_number(key, value);
        else if (key == "delta") c.laws.delta = to_number(key, value);
        else if (key == "gamma") c.laws.gamma = to_number(key, value);
        else if (key == "beta") c.laws.beta = to_number(key, value);
        else if (key == "mu") c.laws.mu = to_number(key, value);
        else if (key == "r") c.laws.r = to_number(key, value);
        else if (key == "scenario") c.scenario.id = value;
        else if (key == "snapshot_every") c.snapshot_every = to_int(key, value);
        else if (key.rfind("scenario.", 0) == 0 && key.size() > 9) c.scenario.params[key.substr(9)] = to_number(key, value);
        else throw ConfigError("unknown config key '" + key + "' on line " + std::to_string(line_no));
    }
    return c;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_config(in);
}

std::string to_config_text(const RunConfig& c) {
    std::ostringstream os;
    os << "dim = " << c.dim << '\n'
       << "n = " << c.n << '\n'
       << "length = " << format_double(c.length) << '\n'
       << "t_end = " << format_double(c.t_end) << '\n'
       << "cfl = " << format_double(c.step.cfl) << '\n'
       << "epsilon = " << format_double(c.laws.epsilon) << '\n'
       << "delta = " << format_double(c.laws.delta) << '\n'
       << "gamma = " << format_double(c.laws.gamma) << '\n'
       << "beta = " << format_double(c.laws.beta) << '\n'
       << "mu = " << format_double(c.laws.mu) << '\n'
       << "r = " << format_double(c.laws.r) << '\n'
       << "scenario = " << c.scenario.id << '\n';
    for (const auto& [k, v] : c.scenario.params) os << "scenario." << k << " = " << format_double(v) << '\n';
    os << "snapshot_every = " << c.snapshot_every << '\n';
    return os.str();
}

}  // namespace congestion
