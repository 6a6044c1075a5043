#include "congestion/laws.hpp"

#include <cmath>
#include <sstream>

#include "congestion/errors.hpp"

namespace congestion {

namespace {

constexpr double kRegimeTolerance = 1e-12;

void check_density(double rho, const LawParams& params) {
    if (!std::isfinite(rho) || rho < 0.0) {
        std::ostringstream os;
        os << "density " << rho << " outside [0, inf)";
        throw DomainError(os.str());
    }
    if (!params.truncated() && rho >= 1.0) {
        std::ostringstream os;
        os.precision(17);
        os << "density " << rho << " >= 1 with the untruncated laws";
        throw DomainError(os.str());
    }
}

bool on_exact_branch(double rho, const LawParams& params) {
    return !params.truncated() || rho <= 1.0 - params.delta;
}

}  // namespace

void LawParams::validate() const {
    std::ostringstream os;
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) os << "epsilon must be > 0; ";
    if (!(delta >= 0.0 && delta < 1.0)) os << "delta must lie in [0, 1); ";
    if (!(gamma > 1.0) || !std::isfinite(gamma)) os << "gamma must be > 1; ";
    if (!(beta > 1.0) || !std::isfinite(beta)) os << "beta must be > 1; ";
    if (!(mu > 0.0) || !std::isfinite(mu)) os << "mu must be > 0; ";
    if (!(r > 0.0) || !std::isfinite(r)) os << "r must be > 0; ";
    if (!os.str().empty()) throw ConfigError("invalid law parameters: " + os.str());
}

std::string_view to_string(Regime regime) noexcept {
    switch (regime) {
        case Regime::MemoryAndPressure:
            return "MemoryAndPressure";
        case Regime::MemoryNoPressure:
            return "MemoryNoPressure";
        case Regime::PressureNoMemory:
            return "PressureNoMemory";
    }
    return "unknown";
}

Regime parse_regime(std::string_view name) {
    for (auto r : {Regime::MemoryAndPressure, Regime::MemoryNoPressure, Regime::PressureNoMemory}) {
        if (to_string(r) == name) return r;
    }
    throw ConfigError("unknown regime '" + std::string(name) + "'");
}

LawValues evaluate_laws(double rho, const LawParams& params) {
    check_density(rho, params);
    const double eps = params.epsilon;
    const double g = params.gamma;
    const double b = params.beta;

    LawValues v;
    if (rho == 0.0) {
        v.nu = 1.0 / (2.0 * params.mu);
        return v;
    }
    if (on_exact_branch(rho, params)) {
        const double gap = 1.0 - rho;
        const double q = rho / gap;
        v.p = eps * std::pow(q, g);
        v.lam = eps * std::pow(q, b);
        v.big_lam = eps / (b - 1.0) * std::pow(rho, b) / std::pow(gap, b - 1.0);
        v.h = eps / (g - 1.0) * std::pow(rho, g) / std::pow(gap, g - 1.0);
    } else {
        const double d = params.delta;
        const double q = rho / d;
        v.p = eps * std::pow(q, g);
        v.lam = eps * std::pow(q, b);
        v.big_lam = eps / (b - 1.0) * std::pow(q, b) -
                    eps / ((b - 1.0) * std::pow(d, b)) * std::pow(1.0 - d, b) * rho;
        v.h = eps / (g - 1.0) * std::pow(q, g) -
              eps / ((g - 1.0) * std::pow(d, g)) * std::pow(1.0 - d, g) * rho;
    }
    v.nu = 1.0 / (2.0 * params.mu + v.lam);
    return v;
}

double pressure_stiffness(double rho, const LawParams& params) {
    check_density(rho, params);
    if (rho == 0.0) return 0.0;
    const double p = evaluate_laws(rho, params).p;
    if (on_exact_branch(rho, params)) return params.gamma * p / (1.0 - rho);
    return params.gamma * p;
}

Regime regime(const LawParams& params) noexcept {
    const double s = 1.0 + params.gamma - params.beta;
    if (std::abs(s) <= kRegimeTolerance) return Regime::MemoryAndPressure;
    return s < 0.0 ? Regime::MemoryNoPressure : Regime::PressureNoMemory;
}

double constraint3_coefficient(double beta) {
    return std::pow(beta - 1.0, -1.0 / (beta - 1.0));
}

ConstraintResiduals constraint_residuals(double rho, const LawParams& params) {
    if (params.truncated()) throw DomainError("constraint identities hold for the untruncated laws only");
    if (!(rho > 0.0 && rho < 1.0)) throw DomainError("constraint identities require 0 < rho < 1");
    const LawValues v = evaluate_laws(rho, params);
    const double eps = params.epsilon;
    const double g = params.gamma;
    const double b = params.beta;

    ConstraintResiduals res;
    res.lhs1 = v.big_lam;
    const double rhs1 = rho / (b - 1.0) * std::pow(eps, (1.0 + g - b) / g) * std::pow(v.p, (b - 1.0) / g);
    res.r1 = std::abs(res.lhs1 - rhs1);

    res.lhs2 = (1.0 - rho) * v.p;
    const double rhs2 = std::pow(eps, 1.0 / g) * rho * std::pow(v.p, (g - 1.0) / g);
    res.r2 = std::abs(res.lhs2 - rhs2);

    res.lhs3 = (1.0 - rho) * v.big_lam;
    const double rhs3 = constraint3_coefficient(b) * std::pow(eps, 1.0 / (b - 1.0)) *
                        std::pow(rho, b / (b - 1.0)) * std::pow(v.big_lam, (b - 2.0) / (b - 1.0));
    res.r3 = std::abs(res.lhs3 - rhs3);
    return res;
}

}  // namespace congestion
