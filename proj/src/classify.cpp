#include "congestion/classify.hpp"

#include <algorithm>
#include <sstream>

#include "congestion/errors.hpp"
#include "congestion/rate_fit.hpp"

namespace congestion {

namespace {

std::string describe(const Classification& c) {
    std::ostringstream os;
    os.precision(4);
    for (const auto& [name, slope] : c.slopes) {
        os << "slope(" << name << ")=";
        if (slope) os << *slope;
        else os << "degenerate";
        os << ' ';
    }
    os << "max_mp_residual=" << c.max_mp_residual;
    return os.str();
}

bool at_least(const std::optional<double>& s, double bound) { return s && *s >= bound; }
bool below(const std::optional<double>& s, double bound) { return s && *s < bound; }

}  // namespace

Classification collect_evidence(const SweepTable& table, const LawParams& params) {
    Classification c;
    c.expected = regime(params);
    for (const char* m : {"L1_p", "L1_big_lam", "excl_p", "excl_big_lam"}) {
        try {
            c.slopes[m] = fit_rate(table, m).slope;
        } catch (const FitDegenerate&) {
            c.slopes[m] = std::nullopt;
        }
    }
    for (const auto& [axis, v] : sweep_column(table, "max_mp_residual")) c.max_mp_residual = std::max(c.max_mp_residual, v);
    c.evidence = describe(c);
    return c;
}

Classification classify_limit(const SweepTable& table, const LawParams& params) {
    if (table.axis != SweepAxis::Epsilon) throw ConfigError("classification needs an epsilon sweep");
    if (table.completed_rows() < 3) throw SweepDegenerate("classification needs at least 3 completed rows");

    Classification c = collect_evidence(table, params);
    const auto& s = c.slopes;
    if (at_least(s.at("L1_big_lam"), kDecaySlope) && below(s.at("L1_p"), kFlatSlope))
        c.observed = Regime::PressureNoMemory;
    else if (at_least(s.at("L1_p"), kDecaySlope) && below(s.at("L1_big_lam"), kFlatSlope))
        c.observed = Regime::MemoryNoPressure;
    else if (c.max_mp_residual <= kIdentityTolerance && at_least(s.at("excl_p"), kDecaySlope) &&
             at_least(s.at("excl_big_lam"), kDecaySlope))
        c.observed = Regime::MemoryAndPressure;
    else
        throw Unclassifiable("no regime rule fired: " + c.evidence);
    c.agrees = c.observed == c.expected;
    return c;
}

}  // namespace congestion
