#include "congestion/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "congestion/errors.hpp"

namespace congestion {

std::size_t Grid::cells() const noexcept {
    std::size_t c = 1;
    for (int d = 0; d < dim; ++d) c *= static_cast<std::size_t>(n);
    return c;
}

double Grid::cell_volume() const noexcept { return std::pow(dx, dim); }

double Grid::domain_volume() const noexcept { return std::pow(length, dim); }

Grid make_grid(int dim, int n, double length) {
    std::ostringstream os;
    if (dim != 1 && dim != 2) os << "dim must be 1 or 2 (got " << dim << "); ";
    if (n < 4) os << "n must be >= 4 (got " << n << "); ";
    if (!(length > 0.0) || !std::isfinite(length)) os << "length must be > 0; ";
    if (!os.str().empty()) throw ConfigError("invalid grid: " + os.str());
    return Grid{dim, n, length, length / n};
}

template <class Location>
GridScalar<Location>::GridScalar(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.cells()) throw ConfigError("field size does not match grid");
}

template <class Location>
bool GridScalar<Location>::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

template class GridScalar<CellLocation>;
template class GridScalar<NodeLocation>;

FaceVectorField::FaceVectorField(const Grid& grid, double value)
    : grid_(grid), values_(grid.cells() * static_cast<std::size_t>(grid.dim), value) {}

std::span<double> FaceVectorField::component(int axis) noexcept {
    return std::span<double>(values_).subspan(static_cast<std::size_t>(axis) * grid_.cells(), grid_.cells());
}

std::span<const double> FaceVectorField::component(int axis) const noexcept {
    return std::span<const double>(values_).subspan(static_cast<std::size_t>(axis) * grid_.cells(), grid_.cells());
}

bool FaceVectorField::all_finite() const noexcept {
    return std::all_of(values_.begin(), values_.end(), [](double v) { return std::isfinite(v); });
}

ScalarField sample_cells(const Grid& grid, const PointFunction& f) {
    ScalarField s(grid);
    const int ny = grid.dim == 2 ? grid.n : 1;
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid.n; ++i) s.at(i, j) = f(grid.center(i), grid.dim == 2 ? grid.center(j) : 0.0);
    return s;
}

FaceVectorField sample_faces(const Grid& grid, const PointFunction& fx, const PointFunction& fy) {
    FaceVectorField u(grid);
    const int ny = grid.dim == 2 ? grid.n : 1;
    auto ux = u.component(0);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < grid.n; ++i)
            ux[grid.index(i, j)] = fx(grid.face(i), grid.dim == 2 ? grid.center(j) : 0.0);
    if (grid.dim == 2 && fy) {
        auto uy = u.component(1);
        for (int j = 0; j < grid.n; ++j)
            for (int i = 0; i < grid.n; ++i) uy[grid.index(i, j)] = fy(grid.center(i), grid.face(j));
    }
    return u;
}

ScalarField divergence(const FaceVectorField& u) {
    const Grid& g = u.grid();
    ScalarField out(g);
    const double inv = 1.0 / g.dx;
    const auto ux = u.component(0);
    if (g.dim == 1) {
        for (int i = 0; i < g.n; ++i) out.at(i) = (ux[g.index(i)] - ux[g.index(i - 1)]) * inv;
        return out;
    }
    const auto uy = u.component(1);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i)
            out.at(i, j) = (ux[g.index(i, j)] - ux[g.index(i - 1, j)]) * inv +
                           (uy[g.index(i, j)] - uy[g.index(i, j - 1)]) * inv;
    return out;
}

FaceVectorField gradient(const ScalarField& s) {
    const Grid& g = s.grid();
    FaceVectorField out(g);
    const double inv = 1.0 / g.dx;
    auto gx = out.component(0);
    if (g.dim == 1) {
        for (int i = 0; i < g.n; ++i) gx[g.index(i)] = (s.at(i + 1) - s.at(i)) * inv;
        return out;
    }
    auto gy = out.component(1);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) {
            gx[g.index(i, j)] = (s.at(i + 1, j) - s.at(i, j)) * inv;
            gy[g.index(i, j)] = (s.at(i, j + 1) - s.at(i, j)) * inv;
        }
    return out;
}

NodeField curl(const FaceVectorField& u) {
    const Grid& g = u.grid();
    NodeField out(g);
    if (g.dim == 1) return out;
    const double inv = 1.0 / g.dx;
    const auto ux = u.component(0);
    const auto uy = u.component(1);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i)
            out.at(i, j) = (uy[g.index(i + 1, j)] - uy[g.index(i, j)]) * inv -
                           (ux[g.index(i, j + 1)] - ux[g.index(i, j)]) * inv;
    return out;
}

FaceVectorField curl_transpose(const NodeField& w) {
    const Grid& g = w.grid();
    FaceVectorField out(g);
    if (g.dim == 1) return out;
    const double inv = 1.0 / g.dx;
    auto ox = out.component(0);
    auto oy = out.component(1);
    for (int j = 0; j < g.n; ++j)
        for (int i = 0; i < g.n; ++i) {
            ox[g.index(i, j)] = (w.at(i, j) - w.at(i, j - 1)) * inv;
            oy[g.index(i, j)] = (w.at(i - 1, j) - w.at(i, j)) * inv;
        }
    return out;
}

MeanAndMeasure mean_and_measure(const ScalarField& s, double threshold) {
    const auto v = s.values();
    const auto count = std::count_if(v.begin(), v.end(), [threshold](double x) { return x >= threshold; });
    return {mean(s), static_cast<double>(count) * s.grid().cell_volume()};
}

double inner(const ScalarField& a, const ScalarField& b) {
    const auto va = a.values();
    const auto vb = b.values();
    return std::inner_product(va.begin(), va.end(), vb.begin(), 0.0) * a.grid().cell_volume();
}

double inner(const FaceVectorField& a, const FaceVectorField& b) {
    const auto va = a.values();
    const auto vb = b.values();
    return std::inner_product(va.begin(), va.end(), vb.begin(), 0.0) * a.grid().cell_volume();
}

double mean(const ScalarField& s) {
    const auto v = s.values();
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace congestion
