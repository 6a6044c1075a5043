#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "congestion/errors.hpp"
#include "congestion/grid.hpp"

using namespace congestion;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double max_error(std::span<const double> a, std::span<const double> b) {
    double e = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) e = std::max(e, std::abs(a[k] - b[k]));
    return e;
}

ScalarField random_cells(const Grid& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    ScalarField s(g);
    for (double& v : s.values()) v = d(rng);
    return s;
}

FaceVectorField random_faces(const Grid& g, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    FaceVectorField u(g);
    for (double& v : u.values()) v = d(rng);
    return u;
}

double divergence_error(int n) {
    const Grid g = make_grid(1, n, 1.0);
    const FaceVectorField u = sample_faces(g, [](double x, double) { return std::sin(kTwoPi * x); });
    const ScalarField exact = sample_cells(g, [](double x, double) { return kTwoPi * std::cos(kTwoPi * x); });
    return max_error(divergence(u).values(), exact.values());
}

}  // namespace

TEST_CASE("grid construction") {
    CHECK(make_grid(1, 256, 1.0).dx == 1.0 / 256);
    CHECK(make_grid(2, 64, 2.0).dx == 0.03125);
    CHECK(make_grid(2, 64, 2.0).cells() == 64u * 64u);
    CHECK(make_grid(2, 8, 2.0).domain_volume() == doctest::Approx(4.0));
    CHECK_THROWS_AS(make_grid(1, 2, 1.0), ConfigError);
    CHECK_THROWS_AS(make_grid(3, 16, 1.0), ConfigError);
    CHECK_THROWS_AS(make_grid(1, 16, 0.0), ConfigError);
}

TEST_CASE("periodic indexing") {
    const Grid g = make_grid(2, 8, 1.0);
    CHECK(g.index(-1, 0) == g.index(7, 0));
    CHECK(g.index(8, 9) == g.index(0, 1));
    CHECK(g.index(3, 2) == 2u * 8u + 3u);
}

TEST_CASE("divergence of constants and smooth fields") {
    const Grid g = make_grid(1, 32, 1.0);
    CHECK(max_abs(divergence(FaceVectorField(g, 3.0)).values()) == 0.0);

    const double e64 = divergence_error(64), e128 = divergence_error(128), e256 = divergence_error(256);
    CHECK(e64 / e128 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(e128 / e256 == doctest::Approx(4.0).epsilon(0.05));
    CHECK(e256 <= e64 * 64.0 * 64.0 / (256.0 * 256.0) * 1.1);
}

TEST_CASE("2D divergence of a y-independent field is the 1D one column by column") {
    const Grid g1 = make_grid(1, 32, 1.0), g2 = make_grid(2, 32, 1.0);
    auto fx = [](double x, double) { return std::sin(kTwoPi * x); };
    const ScalarField d1 = divergence(sample_faces(g1, fx));
    const ScalarField d2 = divergence(sample_faces(g2, fx, [](double, double) { return 0.0; }));
    for (int j = 0; j < 32; ++j)
        for (int i = 0; i < 32; ++i) CHECK(d2.at(i, j) == doctest::Approx(d1.at(i)).epsilon(1e-14));
}

TEST_CASE("gradient of constants and smooth fields") {
    const Grid g = make_grid(1, 128, 1.0);
    CHECK(max_abs(gradient(ScalarField(g, 5.0)).values()) == 0.0);
    const FaceVectorField grad = gradient(sample_cells(g, [](double x, double) { return std::cos(kTwoPi * x); }));
    const FaceVectorField exact = sample_faces(g, [](double x, double) { return -kTwoPi * std::sin(kTwoPi * x); });
    const double err = max_error(grad.values(), exact.values());
    // second order: the leading term is 2 pi (2 pi dx)^2 / 24
    CHECK(err <= kTwoPi * std::pow(kTwoPi * g.dx, 2) / 24.0 * 1.01);
    CHECK(err > 0.0);
}

TEST_CASE("gradient is minus the adjoint of divergence") {
    std::mt19937_64 rng(5);
    for (int dim : {1, 2}) {
        const Grid g = make_grid(dim, 16, 1.3);
        const ScalarField s = random_cells(g, rng);
        const FaceVectorField u = random_faces(g, rng);
        const double lhs = inner(gradient(s), u);
        const double rhs = -inner(s, divergence(u));
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("curl") {
    const Grid g1 = make_grid(1, 16, 1.0);
    std::mt19937_64 rng(9);
    CHECK(max_abs(curl(random_faces(g1, rng)).values()) == 0.0);

    const Grid g = make_grid(2, 64, 1.0);
    const FaceVectorField u = sample_faces(
        g, [](double, double y) { return -std::sin(kTwoPi * y); }, [](double, double) { return 0.0; });
    const NodeField w = curl(u);
    double err = 0.0;
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) err = std::max(err, std::abs(w.at(i, j) - kTwoPi * std::cos(kTwoPi * g.face(j))));
    CHECK(err <= kTwoPi * std::pow(kTwoPi * g.dx, 2) / 24.0 * 1.01);

    const ScalarField smooth =
        sample_cells(g, [](double x, double y) { return std::sin(kTwoPi * x) * std::cos(2 * kTwoPi * y); });
    CHECK(max_abs(curl(gradient(smooth)).values()) <= 1e-12);
    // random data: roundoff scales with max|s| / dx^2
    const ScalarField s = random_cells(g, rng);
    CHECK(max_abs(curl(gradient(s)).values()) <= 1e-14 / (g.dx * g.dx));
}

TEST_CASE("curl_transpose is the transpose of curl") {
    std::mt19937_64 rng(13);
    const Grid g = make_grid(2, 12, 1.0);
    const FaceVectorField u = random_faces(g, rng);
    NodeField w(g);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    for (double& v : w.values()) v = d(rng);
    const NodeField cu = curl(u);
    const FaceVectorField ctw = curl_transpose(w);
    double lhs = 0.0, rhs = 0.0;
    for (std::size_t k = 0; k < w.size(); ++k) lhs += w[k] * cu[k];
    for (std::size_t k = 0; k < u.size(); ++k) rhs += ctw[k] * u[k];
    CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(lhs)));
}

TEST_CASE("mean and superlevel measure") {
    const Grid g = make_grid(1, 4, 1.0);
    const MeanAndMeasure m = mean_and_measure(ScalarField(g, {0.2, 0.96, 0.5, 0.97}), 0.95);
    CHECK(m.superlevel_measure == doctest::Approx(0.5));
    CHECK(m.mean == doctest::Approx(0.6575));

    const Grid g2 = make_grid(2, 8, 2.0);
    CHECK(mean_and_measure(ScalarField(g2, 0.4), 0.4).superlevel_measure == doctest::Approx(4.0));
    CHECK(mean_and_measure(ScalarField(g2, 0.4), 1.4).superlevel_measure == 0.0);
}
