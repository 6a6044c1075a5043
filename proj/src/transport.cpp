#include "congestion/transport.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "congestion/errors.hpp"

namespace congestion {

void StepControl::validate() const {
    if (!(cfl > 0.0 && cfl < 1.0)) throw ConfigError("cfl must lie in (0, 1)");
    if (!(dt_min > 0.0)) throw ConfigError("dt_min must be > 0");
    if (max_halvings < 0) throw ConfigError("max_halvings must be >= 0");
}

double stable_dt(const FaceVectorField& u, const Grid& grid, const StepControl& ctrl) {
    const double umax = std::max(max_abs(u.values()), 1e-14);
    return ctrl.cfl * grid.dx / (grid.dim * umax);
}

double relaxation_dt(const ScalarField& rho, const LawParams& params, const StepControl& ctrl) {
    double rate = 0.0;
    for (std::size_t k = 0; k < rho.size(); ++k)
        rate = std::max(rate, pressure_stiffness(rho[k], params) * evaluate_laws(rho[k], params).nu);
    return rate > 0.0 ? ctrl.cfl / rate : std::numeric_limits<double>::infinity();
}

namespace {

// out = q - dt * div(u * upwind(q))
ScalarField upwind_update(const ScalarField& q, const FaceVectorField& u, double dt) {
    const Grid& g = q.grid();
    const double c = dt / g.dx;
    ScalarField out = q;
    const int ny = g.dim == 2 ? g.n : 1;
    for (int axis = 0; axis < g.dim; ++axis) {
        const auto ua = u.component(axis);
        std::vector<double> flux(g.cells());
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < g.n; ++i) {
                const std::size_t f = g.index(i, j);
                const double vel = ua[f];
                const double downstream = axis == 0 ? q.at(i + 1, j) : q.at(i, j + 1);
                flux[f] = vel * (vel > 0.0 ? q[f] : downstream);
            }
        for (int j = 0; j < ny; ++j)
            for (int i = 0; i < g.n; ++i) {
                const std::size_t cell = g.index(i, j);
                const std::size_t behind = axis == 0 ? g.index(i - 1, j) : g.index(i, j - 1);
                out[cell] -= c * (flux[cell] - flux[behind]);
            }
    }
    return out;
}

}  // namespace

ScalarField advect_density(const ScalarField& rho, const FaceVectorField& u, double dt, const LawParams& params) {
    ScalarField next = upwind_update(rho, u, dt);
    if (!params.truncated()) {
        const auto v = next.values();
        const double top = *std::max_element(v.begin(), v.end());
        if (top >= 1.0) throw CongestionOverflow(top);
    }
    return next;
}

DensityStep advect_density_adaptive(const ScalarField& rho, const FaceVectorField& u, double dt,
                                    const LawParams& params, const StepControl& ctrl) {
    for (int halvings = 0;; ++halvings) {
        try {
            return {advect_density(rho, u, dt, params), dt, halvings};
        } catch (const CongestionOverflow&) {
            if (halvings >= ctrl.max_halvings || dt / 2.0 < ctrl.dt_min) throw;
            dt /= 2.0;
        }
    }
}

ScalarField advect_big_lambda(const ScalarField& big_lam, const FaceVectorField& u, const ScalarField& divu,
                              const ScalarField& lam, double dt) {
    ScalarField next = upwind_update(big_lam, u, dt);
    for (std::size_t k = 0; k < next.size(); ++k) next[k] -= dt * lam[k] * divu[k];
    return next;
}

}  // namespace congestion
