#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "congestion/errors.hpp"
#include "congestion/momentum.hpp"

using namespace congestion;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

LawParams manufactured_params() {
    LawParams p;
    p.mu = 0.5;
    p.r = 1.0;
    p.epsilon = 0.7;  // irrelevant at rho = 0
    return p;
}

FaceVectorField sine_force(const Grid& g) {
    return sample_faces(g, [](double x, double) { return std::sin(kTwoPi * x); },
                        [](double, double) { return 0.0; });
}

double manufactured_error(int n) {
    const Grid g = make_grid(1, n, 1.0);
    const MomentumSolution sol = solve_momentum(ScalarField(g), sine_force(g), manufactured_params(), SolverOptions{});
    const double c = 1.0 / (1.0 + 4.0 * std::numbers::pi * std::numbers::pi);
    double err = 0.0;
    for (int i = 0; i < n; ++i) err = std::max(err, std::abs(sol.u[i] - c * std::sin(kTwoPi * g.face(i))));
    return err;
}

ScalarField random_density(const Grid& g, std::mt19937_64& rng, double hi) {
    std::uniform_real_distribution<double> d(0.0, hi);
    ScalarField rho(g);
    for (double& v : rho.values()) v = d(rng);
    return rho;
}

}  // namespace

TEST_CASE("constant force gives constant velocity") {
    const Grid g = make_grid(1, 32, 1.0);
    LawParams p;
    p.r = 2.0;
    const MomentumSolution sol = solve_momentum(ScalarField(g), FaceVectorField(g, 3.0), p, SolverOptions{});
    for (double v : sol.u.values()) CHECK(v == doctest::Approx(1.5).epsilon(1e-10));
    CHECK(sol.report.converged);
}

TEST_CASE("single Fourier mode") {
    const double e64 = manufactured_error(64), e128 = manufactured_error(128), e256 = manufactured_error(256);
    CHECK(std::log2(e64 / e128) >= 1.9);
    CHECK(std::log2(e128 / e256) >= 1.9);
    CHECK(e256 < 1e-5);

    // the discrete symbol 2 mu (2 sin(pi dx) / dx)^2 + r is reproduced to solver tolerance
    const Grid g = make_grid(1, 64, 1.0);
    const MomentumSolution sol = solve_momentum(ScalarField(g), sine_force(g), manufactured_params(), SolverOptions{});
    const double k2 = std::pow(2.0 * std::sin(std::numbers::pi * g.dx) / g.dx, 2);
    for (int i = 0; i < g.n; ++i) CHECK(sol.u[i] == doctest::Approx(std::sin(kTwoPi * g.face(i)) / (k2 + 1.0)).epsilon(1e-8));
    CHECK(sol.report.iterations <= 5 * g.n);
}

TEST_CASE("operator is symmetric positive definite") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (int dim : {1, 2}) {
        const Grid g = make_grid(dim, 16, 1.0);
        LawParams p;
        p.r = 0.7;
        const MomentumOperator A(random_density(g, rng, 0.9), p);
        for (int trial = 0; trial < 20; ++trial) {
            FaceVectorField psi(g), phi(g);
            for (double& v : psi.values()) v = d(rng);
            for (double& v : phi.values()) v = d(rng);
            CHECK(A.quadratic_form(psi) >= p.r * inner(psi, psi));
            const double a = inner(A.apply(psi), phi), b = inner(psi, A.apply(phi));
            CHECK(std::abs(a - b) <= 1e-12 * (1.0 + std::abs(a)));
            CHECK(A.quadratic_form(psi) == doctest::Approx(inner(A.apply(psi), psi)).epsilon(1e-12));
        }
    }
}

TEST_CASE("diagonal matches the operator on unit vectors") {
    std::mt19937_64 rng(4);
    const Grid g = make_grid(2, 6, 1.0);
    const MomentumOperator A(random_density(g, rng, 0.8), LawParams{});
    const std::vector<double> diag = A.diagonal();
    for (std::size_t k = 0; k < diag.size(); ++k) {
        FaceVectorField e(g);
        e[k] = 1.0;
        CHECK(A.apply(e)[k] == doctest::Approx(diag[k]).epsilon(1e-14));
    }
}

TEST_CASE("momentum residual and warm start") {
    std::mt19937_64 rng(8);
    const Grid g = make_grid(2, 24, 1.0);
    const ScalarField rho = random_density(g, rng, 0.8);
    const FaceVectorField f = sample_faces(
        g, [](double x, double y) { return std::sin(kTwoPi * x) + std::cos(kTwoPi * y); },
        [](double x, double) { return std::cos(kTwoPi * x); });
    LawParams p;
    const MomentumSolution sol = solve_momentum(rho, f, p, SolverOptions{});
    REQUIRE(sol.report.converged);

    ScalarField pressure(g);
    for (std::size_t k = 0; k < rho.size(); ++k) pressure[k] = evaluate_laws(rho[k], p).p;
    const FaceVectorField Au = MomentumOperator(rho, p).apply(sol.u);
    const FaceVectorField gp = gradient(pressure);
    double res = 0.0, scale = 0.0;
    for (std::size_t k = 0; k < Au.size(); ++k) {
        res += std::pow(f[k] - gp[k] - Au[k], 2);
        scale += std::pow(f[k] - gp[k], 2);
    }
    CHECK(std::sqrt(res / scale) <= 1e-10 * 1.0001);

    const MomentumSolution warm = solve_momentum(rho, f, p, SolverOptions{}, &sol.u);
    CHECK(warm.report.iterations <= 1);
}

TEST_CASE("iteration limit raises SolverDiverged") {
    std::mt19937_64 rng(1);
    const Grid g = make_grid(1, 64, 1.0);
    SolverOptions opts;
    opts.max_iter = 2;
    CHECK_THROWS_AS(solve_momentum(random_density(g, rng, 0.9), sine_force(g), LawParams{}, opts), SolverDiverged);
    CHECK(opts.iteration_limit(g) == 2);
    CHECK(SolverOptions{}.iteration_limit(g) == 50 * 64);
}

TEST_CASE("zero-mean Poisson problem") {
    const Grid g = make_grid(1, 256, 1.0);
    CHECK(max_abs(solve_poisson_zero_mean(ScalarField(g), SolverOptions{}).values()) == 0.0);
    CHECK_THROWS_AS(solve_poisson_zero_mean(ScalarField(g, 1.0), SolverOptions{}), CompatibilityError);

    const ScalarField rhs = sample_cells(g, [](double x, double) { return std::cos(kTwoPi * x); });
    const ScalarField s = solve_poisson_zero_mean(rhs, SolverOptions{});
    double err = 0.0;
    for (int i = 0; i < g.n; ++i)
        err = std::max(err, std::abs(s[i] - std::cos(kTwoPi * g.center(i)) / (kTwoPi * kTwoPi)));
    // leading truncation error of the 3-point Laplacian on one mode
    CHECK(err <= 1.01 * std::pow(g.dx, 2) / 12.0);
    CHECK(std::abs(mean(s)) <= 1e-14);
}

TEST_CASE("S of the effective flux") {
    const Grid g = make_grid(1, 256, 1.0);
    const LawParams p = manufactured_params();
    const FaceVectorField f = sine_force(g);
    const MomentumSolution sol = solve_momentum(ScalarField(g), f, p, SolverOptions{});
    const ScalarField S = compute_S(sol.u, f, p, SolverOptions{});
    double err = 0.0;
    for (int i = 0; i < g.n; ++i)
        err = std::max(err, std::abs(S[i] - kTwoPi * std::cos(kTwoPi * g.center(i)) / (1.0 + kTwoPi * kTwoPi)));
    CHECK(err <= 1e-4);
    CHECK(std::abs(mean(S)) <= 1e-13);

    // f = r u has no source
    FaceVectorField ru = sol.u;
    for (double& v : ru.values()) v *= p.r;
    CHECK(max_abs(compute_S(sol.u, ru, p, SolverOptions{}).values()) == 0.0);

    std::mt19937_64 rng(2);
    const Grid g2 = make_grid(2, 16, 1.0);
    FaceVectorField u(g2), f2(g2);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double& v : u.values()) v = d(rng);
    for (double& v : f2.values()) v = d(rng);
    CHECK(std::abs(mean(compute_S(u, f2, p, SolverOptions{}))) <= 1e-13);
}

TEST_CASE("solver option validation") {
    SolverOptions o;
    o.tol = 0.0;
    CHECK_THROWS_AS(o.validate(), ConfigError);
    o = SolverOptions{};
    o.max_iter = -1;
    CHECK_THROWS_AS(o.validate(), ConfigError);
}
