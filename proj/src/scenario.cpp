#include "congestion/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "congestion/config.hpp"
#include "congestion/errors.hpp"

namespace congestion {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct ScenarioInfo {
    std::string id;
    std::set<std::string> keys;
    int required_dim;  // 0: any
};

const std::vector<ScenarioInfo>& registry() {
    static const std::vector<ScenarioInfo> infos{
        {"equilibrium", {"rho0"}, 0},
        {"compression", {"rho0", "F0"}, 0},
        {"two-bump", {"base", "amplitude", "width", "F0"}, 1},
        {"rotation-squeeze", {"rho0", "perturbation", "F0", "Frot"}, 2},
    };
    return infos;
}

const ScenarioInfo& lookup(const std::string& id) {
    for (const auto& info : registry())
        if (info.id == id) return info;
    throw ConfigError("unknown scenario '" + id + "'");
}

// shortest periodic distance between x and c on a circle of length L
double periodic_offset(double x, double c, double length) {
    double d = std::fmod(x - c, length);
    if (d > 0.5 * length) d -= length;
    if (d < -0.5 * length) d += length;
    return d;
}

}  // namespace

const std::vector<std::string>& scenario_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& info : registry()) v.push_back(info.id);
        return v;
    }();
    return ids;
}

void check_scenario(const RunConfig& config) {
    const ScenarioInfo& info = lookup(config.scenario.id);
    for (const auto& [key, value] : config.scenario.params) {
        if (!info.keys.count(key))
            throw ConfigError("scenario '" + info.id + "' has no parameter '" + key + "'");
        if (!std::isfinite(value)) throw ConfigError("scenario." + key + " is not finite");
    }
    if (info.required_dim != 0 && config.dim != info.required_dim)
        throw ConfigError("scenario '" + info.id + "' requires dim = " + std::to_string(info.required_dim));
}

ScenarioData build_scenario(const RunConfig& config) {
    check_scenario(config);
    const Grid grid = config.grid();
    const ScenarioSelection& s = config.scenario;
    const double L = config.length;
    const double k = kTwoPi / L;

    ScenarioData data{ScalarField(grid), FaceVectorField(grid)};
    if (s.id == "equilibrium") {
        data.rho0 = ScalarField(grid, s.get("rho0", 0.3));
    } else if (s.id == "compression") {
        const double f0 = s.get("F0", 5.0);
        data.rho0 = ScalarField(grid, s.get("rho0", 0.6));
        data.force = sample_faces(grid, [=](double x, double) { return f0 * std::sin(k * x); },
                                  [](double, double) { return 0.0; });
    } else if (s.id == "two-bump") {
        const double base = s.get("base", 0.1);
        const double amp = s.get("amplitude", 0.5);
        const double w = s.get("width", 0.06);
        const double f0 = s.get("F0", 5.0);
        if (!(w > 0.0)) throw ConfigError("scenario.width must be > 0");
        data.rho0 = sample_cells(grid, [=](double x, double) {
            const double a = periodic_offset(x, 0.25 * L, L) / w;
            const double b = periodic_offset(x, 0.75 * L, L) / w;
            return base + amp * (std::exp(-a * a) + std::exp(-b * b));
        });
        data.force = sample_faces(grid, [=](double x, double) { return f0 * std::sin(k * x); });
    } else if (s.id == "rotation-squeeze") {
        const double rho0 = s.get("rho0", 0.5);
        const double pert = s.get("perturbation", 0.05);
        const double f0 = s.get("F0", 3.0);
        const double frot = s.get("Frot", 3.0);
        data.rho0 = sample_cells(grid, [=](double x, double y) { return rho0 + pert * std::cos(k * x) * std::cos(k * y); });
        data.force = sample_faces(
            grid, [=](double x, double y) { return f0 * std::sin(k * x) + frot * std::sin(k * x) * std::cos(k * y); },
            [=](double x, double y) { return f0 * std::sin(k * y) - frot * std::cos(k * x) * std::sin(k * y); });
    }

    const auto v = data.rho0.values();
    const double lo = *std::min_element(v.begin(), v.end());
    const double hi = *std::max_element(v.begin(), v.end());
    const double m = mean(data.rho0);
    if (!(lo >= 0.0) || !(hi < 1.0) || !(m < 1.0)) {
        std::ostringstream os;
        os << "initial density must satisfy 0 <= rho0 < 1 and mean < 1 (min " << lo << ", max " << hi
           << ", mean " << m << ")";
        throw ConfigError(os.str());
    }
    return data;
}

}  // namespace congestion
