#include "congestion/law_battery.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "congestion/laws.hpp"

namespace congestion {

bool LawBatteryReport::passed() const noexcept {
    return std::all_of(checks.begin(), checks.end(), [](const LawCheck& c) { return c.passed(); });
}

namespace {

void record(LawCheck& check, double error, double allowed) {
    ++check.samples;
    const double ratio = error / allowed;
    if (!(ratio <= 1.0)) ++check.failures;  // NaN counts as failure
    check.worst = std::max(check.worst, std::isnan(ratio) ? INFINITY : ratio);
}

struct Sampler {
    std::mt19937_64 rng;
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    LawParams params() {
        LawParams p;
        p.gamma = uniform(1.1, 4.0);
        p.beta = uniform(1.1, 4.0);
        p.epsilon = log_uniform(1e-6, 1.0);
        p.mu = uniform(0.05, 2.0);
        p.r = 1.0;
        return p;
    }
};

// rho f'(rho) - f(rho) with a central difference of step h.
template <class F>
double legendre_defect(F&& f, double rho, double h) {
    const double derivative = (f(rho + h) - f(rho - h)) / (2.0 * h);
    return rho * derivative - f(rho);
}

void thermodynamic_checks(LawCheck& check_h, LawCheck& check_lam, double rho, double h, const LawParams& params) {
    const LawValues v = evaluate_laws(rho, params);
    const double dh = legendre_defect([&](double x) { return evaluate_laws(x, params).h; }, rho, h);
    const double dl = legendre_defect([&](double x) { return evaluate_laws(x, params).big_lam; }, rho, h);
    record(check_h, std::abs(dh - v.p), 1e-5 * std::abs(v.p));
    record(check_lam, std::abs(dl - v.lam), 1e-5 * std::abs(v.lam));
}

}  // namespace

LawBatteryReport run_law_battery(int samples, std::uint64_t seed) {
    Sampler s{std::mt19937_64(seed)};
    LawCheck r1{"constraint R1 (Lambda vs p)"};
    LawCheck r2{"constraint R2 ((1-rho) p)"};
    LawCheck r3{"constraint R3 ((1-rho) Lambda)"};
    LawCheck th_exact{"rho H' - H = p (exact)"};
    LawCheck tl_exact{"rho Lambda' - Lambda = lambda (exact)"};
    LawCheck th_trunc{"rho H' - H = p (truncated)"};
    LawCheck tl_trunc{"rho Lambda' - Lambda = lambda (truncated)"};
    LawCheck cont{"branch continuity at 1 - delta"};
    LawCheck nu{"0 < nu <= 1/(2 mu)"};

    for (int k = 0; k < samples; ++k) {
        LawParams params = s.params();
        const double rho = s.uniform(0.01, 0.99);

        const ConstraintResiduals res = constraint_residuals(rho, params);
        record(r1, res.r1, 1e-12 * (1.0 + std::abs(res.lhs1)));
        record(r2, res.r2, 1e-12 * (1.0 + std::abs(res.lhs2)));
        record(r3, res.r3, 1e-12 * (1.0 + std::abs(res.lhs3)));

        thermodynamic_checks(th_exact, tl_exact, rho, 1e-6 * (1.0 - rho), params);

        const double nu_value = evaluate_laws(rho, params).nu;
        record(nu, (nu_value > 0.0 && nu_value <= 1.0 / (2.0 * params.mu)) ? 0.0 : 2.0, 1.0);

        LawParams truncated = params;
        truncated.delta = s.log_uniform(1e-3, 0.3);
        const double d = truncated.delta;
        // strictly inside the polynomial branch, away from the junction
        const double rho_t = s.uniform(1.0 - 0.9 * d, 1.5);
        thermodynamic_checks(th_trunc, tl_trunc, rho_t, 1e-6 * rho_t, truncated);
        // strictly inside the singular branch of the truncated law
        const double rho_e = s.uniform(0.01, 1.0 - 1.1 * d);
        thermodynamic_checks(th_trunc, tl_trunc, rho_e, 1e-6 * (1.0 - rho_e), truncated);

        const double junction = 1.0 - d;
        const LawValues below = evaluate_laws(junction, truncated);
        const LawValues above = evaluate_laws(std::nextafter(junction, 2.0), truncated);
        for (auto [a, b] : {std::pair{below.p, above.p}, std::pair{below.lam, above.lam},
                            std::pair{below.big_lam, above.big_lam}, std::pair{below.h, above.h}}) {
            record(cont, std::abs(a - b), 1e-12 * std::max(std::abs(a), std::abs(b)));
        }
        const double nu_t = evaluate_laws(rho_t, truncated).nu;
        record(nu, (nu_t > 0.0 && nu_t <= 1.0 / (2.0 * params.mu)) ? 0.0 : 2.0, 1.0);
    }
    return {{r1, r2, r3, th_exact, tl_exact, th_trunc, tl_trunc, cont, nu}};
}

}  // namespace congestion
