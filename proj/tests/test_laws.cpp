#include <doctest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <random>

#include "congestion/errors.hpp"
#include "congestion/law_battery.hpp"
#include "congestion/laws.hpp"

using namespace congestion;

namespace {

LawParams make(double eps, double gamma, double beta, double mu = 0.5, double delta = 0.0) {
    LawParams p;
    p.epsilon = eps;
    p.gamma = gamma;
    p.beta = beta;
    p.mu = mu;
    p.delta = delta;
    return p;
}

// rho * int_0^rho eps (t/(1-t))^a / t^2 dt with t = rho s^(1/(a-1)), which removes
// the endpoint singularity for a < 2.
double renormalised_oracle(double rho, double eps, double a) {
    auto integrand = [&](double s) {
        const double t = rho * std::pow(s, 1.0 / (a - 1.0));
        return std::pow(1.0 - t, -a);
    };
    const double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, 1.0, 15, 1e-14);
    return rho * eps * std::pow(rho, a - 1.0) / (a - 1.0) * integral;
}

}  // namespace

TEST_CASE("zero density") {
    const LawValues v = evaluate_laws(0.0, make(0.3, 2.5, 1.7, 0.25));
    CHECK(v.p == 0.0);
    CHECK(v.lam == 0.0);
    CHECK(v.big_lam == 0.0);
    CHECK(v.h == 0.0);
    CHECK(v.nu == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("half density with unit stiffness") {
    const LawValues v = evaluate_laws(0.5, make(1.0, 2.0, 3.0, 0.5));
    CHECK(v.p == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v.lam == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(v.big_lam == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(v.h == doctest::Approx(0.5).epsilon(1e-14));
    // 1 / (2 mu + lambda) = 1 / (1 + 1)
    CHECK(v.nu == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("truncated branch values") {
    const LawParams p = make(1.0, 2.0, 3.0, 0.5, 0.25);
    const LawValues v = evaluate_laws(0.8, p);
    CHECK(v.p == doctest::Approx(10.24).epsilon(1e-13));
    CHECK(v.h == doctest::Approx(3.04).epsilon(1e-13));
    CHECK(v.lam == doctest::Approx(std::pow(0.8 / 0.25, 3)).epsilon(1e-13));

    // both branches meet at 1 - delta
    const double below = std::nextafter(0.75, 0.0);
    CHECK(evaluate_laws(0.75, p).h == doctest::Approx(2.25).epsilon(1e-13));
    CHECK(evaluate_laws(below, p).h == doctest::Approx(2.25).epsilon(1e-13));
    CHECK(evaluate_laws(below, p).big_lam == doctest::Approx(evaluate_laws(0.75, p).big_lam).epsilon(1e-12));
    CHECK(evaluate_laws(below, p).p == doctest::Approx(evaluate_laws(0.75, p).p).epsilon(1e-12));

    // truncated laws accept rho >= 1
    CHECK(evaluate_laws(1.5, p).p > evaluate_laws(1.0, p).p);
}

TEST_CASE("domain errors") {
    const LawParams p = make(1e-2, 2.0, 3.0);
    CHECK_THROWS_AS(evaluate_laws(1.0, p), DomainError);
    CHECK_THROWS_AS(evaluate_laws(-1e-3, p), DomainError);
    CHECK_THROWS_AS(evaluate_laws(std::nan(""), p), DomainError);
    CHECK_THROWS_AS(constraint_residuals(0.0, p), DomainError);
    CHECK_THROWS_AS(constraint_residuals(0.5, make(1e-2, 2.0, 3.0, 0.5, 0.1)), DomainError);
}

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(make(1e-2, 2.0, 3.0).validate());
    CHECK_THROWS_AS(make(1e-2, 1.0, 3.0).validate(), ConfigError);
    CHECK_THROWS_AS(make(1e-2, 2.0, 1.0).validate(), ConfigError);
    CHECK_THROWS_AS(make(0.0, 2.0, 3.0).validate(), ConfigError);
    CHECK_THROWS_AS(make(1e-2, 2.0, 3.0, 0.0).validate(), ConfigError);
    CHECK_THROWS_AS(make(1e-2, 2.0, 3.0, 0.5, 1.0).validate(), ConfigError);
    LawParams p = make(1e-2, 2.0, 3.0);
    p.r = 0.0;
    CHECK_THROWS_AS(p.validate(), ConfigError);
}

TEST_CASE("regime from exponents") {
    CHECK(regime(make(1, 2.0, 3.0)) == Regime::MemoryAndPressure);
    CHECK(regime(make(1, 1.5, 3.0)) == Regime::MemoryNoPressure);
    CHECK(regime(make(1, 3.0, 2.0)) == Regime::PressureNoMemory);
    for (Regime r : {Regime::MemoryAndPressure, Regime::MemoryNoPressure, Regime::PressureNoMemory})
        CHECK(parse_regime(to_string(r)) == r);
    CHECK_THROWS_AS(parse_regime("Unknown"), ConfigError);
}

TEST_CASE("constraint residuals") {
    ConstraintResiduals c = constraint_residuals(0.6, make(0.01, 2.0, 3.0));
    CHECK(c.r1 < 1e-13);
    CHECK(c.r2 < 1e-13);
    CHECK(c.r3 < 1e-13);

    c = constraint_residuals(0.5, make(1.0, 2.0, 3.0));
    CHECK(c.lhs1 == doctest::Approx(0.25).epsilon(1e-15));
    CHECK(c.r1 == doctest::Approx(0.0).epsilon(1e-15));

    c = constraint_residuals(0.9, make(1e-4, 3.0, 2.0));
    CHECK(c.r1 < 1e-12 * (1 + c.lhs1));
    CHECK(c.r2 < 1e-12 * (1 + c.lhs2));
    CHECK(c.r3 < 1e-12 * (1 + c.lhs3));
}

TEST_CASE("constraint3 coefficient against a direct solve") {
    // (1 - rho) Lambda = c eps^(1/(b-1)) rho^(b/(b-1)) Lambda^((b-2)/(b-1)) at one point fixes c.
    for (double b : {1.3, 2.0, 3.0, 3.7}) {
        const double rho = 0.37, eps = 0.2;
        const double lam = eps / (b - 1) * std::pow(rho, b) / std::pow(1 - rho, b - 1);
        const double c = (1 - rho) * lam /
                         (std::pow(eps, 1 / (b - 1)) * std::pow(rho, b / (b - 1)) * std::pow(lam, (b - 2) / (b - 1)));
        CHECK(constraint3_coefficient(b) == doctest::Approx(c).epsilon(1e-12));
    }
}

TEST_CASE("closed forms agree with the quadrature oracle") {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> rho_d(0.01, 0.95), exp_d(1.1, 4.0), log_eps(-6.0, 0.0);
    for (int k = 0; k < 40; ++k) {
        const double rho = rho_d(rng), g = exp_d(rng), b = exp_d(rng), eps = std::pow(10.0, log_eps(rng));
        const LawValues v = evaluate_laws(rho, make(eps, g, b));
        CHECK(std::abs(v.big_lam - renormalised_oracle(rho, eps, b)) <= 1e-8 * std::abs(v.big_lam));
        CHECK(std::abs(v.h - renormalised_oracle(rho, eps, g)) <= 1e-8 * std::abs(v.h));
    }
}

TEST_CASE("laws are nondecreasing and nu is bounded") {
    for (double delta : {0.0, 0.05}) {
        const LawParams p = make(1e-2, 2.3, 1.6, 0.4, delta);
        LawValues prev = evaluate_laws(0.0, p);
        for (int k = 1; k < 2000; ++k) {
            const double rho = (delta > 0 ? 1.2 : 0.999) * k / 2000.0;
            const LawValues v = evaluate_laws(rho, p);
            CHECK(v.p >= prev.p);
            CHECK(v.lam >= prev.lam);
            CHECK(v.big_lam >= prev.big_lam);
            CHECK(v.h >= prev.h);
            CHECK(v.nu > 0.0);
            CHECK(v.nu <= 1.0 / (2.0 * p.mu));
            prev = v;
        }
    }
}

TEST_CASE("pressure stiffness matches a central difference") {
    for (double delta : {0.0, 0.1}) {
        const LawParams p = make(0.3, 2.7, 2.0, 0.5, delta);
        for (double rho : {0.2, 0.5, 0.85, 0.95}) {
            if (delta > 0 && std::abs(rho - 0.9) < 1e-3) continue;
            const double h = 1e-6 * rho;
            const double fd = rho * (evaluate_laws(rho + h, p).p - evaluate_laws(rho - h, p).p) / (2 * h);
            CHECK(pressure_stiffness(rho, p) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
}

TEST_CASE("identity battery passes and is deterministic") {
    const LawBatteryReport a = run_law_battery(200, 11);
    const LawBatteryReport b = run_law_battery(200, 11);
    CHECK(a.passed());
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t k = 0; k < a.checks.size(); ++k) {
        CHECK(a.checks[k].worst == b.checks[k].worst);
        CHECK(a.checks[k].samples >= 100);
    }
}
