#pragma once

/**
 * @file grid.hpp
 * @brief Periodic uniform staggered (MAC) mesh, field containers and the
 *        discrete differential operators acting on them.
 *
 * Index convention (dim = 2; dim = 1 drops j):
 *   cell (i, j)   center (i + 1/2, j + 1/2) dx       storage j * n + i
 *   x-face (i, j) at     (i + 1,   j + 1/2) dx       component 0, j * n + i
 *   y-face (i, j) at     (i + 1/2, j + 1)   dx       component 1, j * n + i
 *   node (i, j)   at     (i + 1,   j + 1)   dx       storage j * n + i
 * i runs along x and is the fastest index.  All index arithmetic wraps
 * periodically; there are no ghost cells.
 */

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace congestion {

struct Grid {
    int dim = 1;
    int n = 4;
    double length = 1.0;
    double dx = 0.25;

    [[nodiscard]] std::size_t cells() const noexcept;
    /// dx^dim, the weight of every cell/face/node sum.
    [[nodiscard]] double cell_volume() const noexcept;
    [[nodiscard]] double domain_volume() const noexcept;
    [[nodiscard]] int wrap(int i) const noexcept { return ((i % n) + n) % n; }
    [[nodiscard]] std::size_t index(int i, int j = 0) const noexcept {
        return static_cast<std::size_t>(wrap(j)) * static_cast<std::size_t>(n) + static_cast<std::size_t>(wrap(i));
    }
    [[nodiscard]] double center(int i) const noexcept { return (i + 0.5) * dx; }
    [[nodiscard]] double face(int i) const noexcept { return (i + 1.0) * dx; }

    friend bool operator==(const Grid&, const Grid&) = default;
};

/// Throws ConfigError unless dim is 1 or 2, n >= 4 and length > 0.
Grid make_grid(int dim, int n, double length);

struct CellLocation {};
struct NodeLocation {};

/// One real value per cell center (CellLocation) or per mesh node (NodeLocation).
template <class Location>
class GridScalar {
public:
    explicit GridScalar(const Grid& grid, double value = 0.0) : grid_(grid), values_(grid.cells(), value) {}
    GridScalar(const Grid& grid, std::vector<double> values);

    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    double& operator[](std::size_t k) noexcept { return values_[k]; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    double& at(int i, int j = 0) noexcept { return values_[grid_.index(i, j)]; }
    [[nodiscard]] double at(int i, int j = 0) const noexcept { return values_[grid_.index(i, j)]; }
    [[nodiscard]] std::span<double> values() noexcept { return values_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    [[nodiscard]] bool all_finite() const noexcept;

private:
    Grid grid_;
    std::vector<double> values_;
};

using ScalarField = GridScalar<CellLocation>;
using NodeField = GridScalar<NodeLocation>;

/// One normal component per cell face and axis; components stored back to back.
class FaceVectorField {
public:
    explicit FaceVectorField(const Grid& grid, double value = 0.0);

    [[nodiscard]] const Grid& grid() const noexcept { return grid_; }
    [[nodiscard]] std::size_t size() const noexcept { return values_.size(); }
    [[nodiscard]] std::span<double> component(int axis) noexcept;
    [[nodiscard]] std::span<const double> component(int axis) const noexcept;
    [[nodiscard]] std::span<double> values() noexcept { return values_; }
    [[nodiscard]] std::span<const double> values() const noexcept { return values_; }
    double& operator[](std::size_t k) noexcept { return values_[k]; }
    double operator[](std::size_t k) const noexcept { return values_[k]; }
    [[nodiscard]] bool all_finite() const noexcept;

private:
    Grid grid_;
    std::vector<double> values_;
};

using PointFunction = std::function<double(double x, double y)>;

/// Samples f at cell centers.
ScalarField sample_cells(const Grid& grid, const PointFunction& f);
/// Samples (fx, fy) at the x- and y-faces; fy is ignored in 1D.
FaceVectorField sample_faces(const Grid& grid, const PointFunction& fx, const PointFunction& fy = {});

ScalarField divergence(const FaceVectorField& u);
FaceVectorField gradient(const ScalarField& s);
/// Node-valued d(u_y)/dx - d(u_x)/dy; identically zero in 1D.
NodeField curl(const FaceVectorField& u);
/// Transpose of curl with respect to the unweighted inner products.
FaceVectorField curl_transpose(const NodeField& w);

struct MeanAndMeasure {
    double mean = 0.0;
    double superlevel_measure = 0.0;  ///< |{s >= threshold}|
};
MeanAndMeasure mean_and_measure(const ScalarField& s, double threshold);

/// Sum of a_k b_k times dx^dim.
double inner(const ScalarField& a, const ScalarField& b);
double inner(const FaceVectorField& a, const FaceVectorField& b);
double mean(const ScalarField& s);
double max_abs(std::span<const double> v);

}  // namespace congestion
