#include "congestion/momentum.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cg.hpp"

namespace congestion {

void SolverOptions::validate() const {
    if (!(tol > 0.0 && tol <= 1e-4)) throw ConfigError("solver tol must lie in (0, 1e-4]");
    if (max_iter < 0) throw ConfigError("solver max_iter must be >= 1 (or 0 for the default)");
}

int SolverOptions::iteration_limit(const Grid& grid) const noexcept {
    return max_iter > 0 ? max_iter : 50 * grid.n * grid.dim;
}

MomentumOperator::MomentumOperator(const ScalarField& rho, const LawParams& params)
    : grid_(rho.grid()), kappa_(rho.size()), mu_(params.mu), r_(params.r) {
    for (std::size_t k = 0; k < rho.size(); ++k) kappa_[k] = 2.0 * params.mu + evaluate_laws(rho[k], params).lam;
}

MomentumOperator::MomentumOperator(const Grid& grid, std::vector<double> kappa, double mu, double r)
    : grid_(grid), kappa_(std::move(kappa)), mu_(mu), r_(r) {
    if (kappa_.size() != grid_.cells()) throw ConfigError("kappa size does not match grid");
}

void MomentumOperator::apply(std::span<const double> u, std::span<double> out) const {
    const Grid& g = grid_;
    const double inv = 1.0 / g.dx;
    const std::size_t cells = g.cells();

    if (g.dim == 1) {
        // flux_i = kappa_i (u_i - u_{i-1}) / dx lives in cell i
        for (int i = 0; i < g.n; ++i) {
            const std::size_t c = g.index(i);
            const std::size_t cn = g.index(i + 1);
            const double flux_here = kappa_[c] * (u[c] - u[g.index(i - 1)]) * inv;
            const double flux_next = kappa_[cn] * (u[cn] - u[c]) * inv;
            out[c] = -(flux_next - flux_here) * inv + r_ * u[c];
        }
        return;
    }

    const auto ux = u.subspan(0, cells);
    const auto uy = u.subspan(cells, cells);
    std::vector<double> kdiv(cells), w(cells);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) {
            const std::size_t c = g.index(i, j);
            const double div = (ux[c] - ux[g.index(i - 1, j)]) * inv + (uy[c] - uy[g.index(i, j - 1)]) * inv;
            kdiv[c] = kappa_[c] * div;
            w[c] = (uy[g.index(i + 1, j)] - uy[c]) * inv - (ux[g.index(i, j + 1)] - ux[c]) * inv;
        }
    auto ox = out.subspan(0, cells);
    auto oy = out.subspan(cells, cells);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) {
            const std::size_t c = g.index(i, j);
            ox[c] = -(kdiv[g.index(i + 1, j)] - kdiv[c]) * inv + mu_ * (w[c] - w[g.index(i, j - 1)]) * inv +
                    r_ * ux[c];
            oy[c] = -(kdiv[g.index(i, j + 1)] - kdiv[c]) * inv + mu_ * (w[g.index(i - 1, j)] - w[c]) * inv +
                    r_ * uy[c];
        }
}

FaceVectorField MomentumOperator::apply(const FaceVectorField& u) const {
    FaceVectorField out(grid_);
    apply(u.values(), out.values());
    return out;
}

std::vector<double> MomentumOperator::diagonal() const {
    const Grid& g = grid_;
    const double inv2 = 1.0 / (g.dx * g.dx);
    const std::size_t cells = g.cells();
    std::vector<double> d(cells * static_cast<std::size_t>(g.dim));
    const double shear = g.dim == 2 ? 2.0 * mu_ * inv2 : 0.0;
    const int ny = g.dim == 2 ? g.n : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < g.n; ++i) {
            const std::size_t c = g.index(i, j);
            d[c] = (kappa_[c] + kappa_[g.index(i + 1, j)]) * inv2 + shear + r_;
            if (g.dim == 2) d[cells + c] = (kappa_[c] + kappa_[g.index(i, j + 1)]) * inv2 + shear + r_;
        }
    return d;
}

double MomentumOperator::quadratic_form(const FaceVectorField& psi) const {
    return inner(apply(psi), psi);
}

namespace {

auto make_preconditioner(const SolverOptions& opts, std::vector<double> diagonal) {
    return [use = opts.preconditioner == Preconditioner::Diagonal, d = std::move(diagonal)](
               std::span<const double> r, std::span<double> z) {
        if (use) {
            for (std::size_t k = 0; k < r.size(); ++k) z[k] = r[k] / d[k];
        } else {
            std::copy(r.begin(), r.end(), z.begin());
        }
    };
}

void remove_mean(std::span<double> v) {
    double s = 0.0;
    for (double x : v) s += x;
    const double m = s / static_cast<double>(v.size());
    for (double& x : v) x -= m;
}

[[noreturn]] void diverged(const char* what, const SolveReport& report) {
    std::ostringstream os;
    os << what << " did not converge in " << report.iterations
       << " iterations (relative residual " << report.final_relative_residual << ")";
    throw SolverDiverged(os.str(), report);
}

}  // namespace

MomentumSolution solve_momentum(const ScalarField& rho, const FaceVectorField& f, const LawParams& params,
                                const SolverOptions& opts, const FaceVectorField* initial_guess) {
    opts.validate();
    const Grid& g = rho.grid();
    if (!(f.grid() == g)) throw ConfigError("forcing and density live on different grids");
    if (!f.all_finite()) throw ConfigError("forcing is not finite");

    const MomentumOperator op(rho, params);
    ScalarField p(g);
    for (std::size_t k = 0; k < rho.size(); ++k) p[k] = evaluate_laws(rho[k], params).p;
    FaceVectorField rhs = gradient(p);
    for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] = f[k] - rhs[k];

    MomentumSolution sol{initial_guess ? *initial_guess : FaceVectorField(g), {}};
    if (!(sol.u.grid() == g)) sol.u = FaceVectorField(g);
    sol.report = detail::conjugate_gradient(
        [&op](std::span<const double> x, std::span<double> y) { op.apply(x, y); },
        make_preconditioner(opts, op.diagonal()), [](std::span<double>) {}, rhs.values(), sol.u.values(), opts.tol,
        opts.iteration_limit(g));
    if (!sol.report.converged) diverged("momentum CG", sol.report);
    return sol;
}

ScalarField solve_poisson_zero_mean(const ScalarField& g_in, const SolverOptions& opts, SolveReport* report) {
    opts.validate();
    const Grid& g = g_in.grid();
    const double scale = max_abs(g_in.values());
    const double m = mean(g_in);
    if (std::abs(m) > 1e-10 * scale) {
        std::ostringstream os;
        os << "Poisson right-hand side has mean " << m << " (sup norm " << scale << ")";
        throw CompatibilityError(os.str());
    }
    ScalarField rhs = g_in;
    remove_mean(rhs.values());

    const double inv2 = 1.0 / (g.dx * g.dx);
    auto apply = [&g, inv2](std::span<const double> s, std::span<double> out) {
        if (g.dim == 1) {
            for (int i = 0; i < g.n; ++i)
                out[g.index(i)] = (2.0 * s[g.index(i)] - s[g.index(i - 1)] - s[g.index(i + 1)]) * inv2;
            return;
        }
        for (int j = 0; j < g.n; ++j)
            for (int i = 0; i < g.n; ++i)
                out[g.index(i, j)] = (4.0 * s[g.index(i, j)] - s[g.index(i - 1, j)] - s[g.index(i + 1, j)] -
                                      s[g.index(i, j - 1)] - s[g.index(i, j + 1)]) *
                                     inv2;
    };

    ScalarField s(g);
    const SolveReport rep = detail::conjugate_gradient(
        apply, make_preconditioner(opts, std::vector<double>(g.cells(), 2.0 * g.dim * inv2)), remove_mean,
        rhs.values(), s.values(), opts.tol, opts.iteration_limit(g));
    if (report) *report = rep;
    if (!rep.converged) diverged("Poisson CG", rep);
    remove_mean(s.values());
    return s;
}

ScalarField compute_S(const FaceVectorField& u, const FaceVectorField& f, const LawParams& params,
                      const SolverOptions& opts) {
    FaceVectorField source(u.grid());
    for (std::size_t k = 0; k < source.size(); ++k) source[k] = f[k] - params.r * u[k];
    return solve_poisson_zero_mean(divergence(source), opts);
}

}  // namespace congestion
