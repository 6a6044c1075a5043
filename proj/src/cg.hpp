#pragma once

// Preconditioned conjugate gradients shared by the momentum and Poisson solves.

#include <cmath>
#include <numeric>
#include <span>
#include <vector>

#include "congestion/momentum.hpp"

namespace congestion::detail {

inline double dot(std::span<const double> a, std::span<const double> b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

/// apply(x, y) computes y = A x; precondition(r, z) computes z = M^-1 r;
/// project(v) maps v onto the solution subspace (identity for nonsingular A).
template <class Apply, class Precondition, class Project>
SolveReport conjugate_gradient(Apply&& apply, Precondition&& precondition, Project&& project,
                               std::span<const double> b, std::span<double> x, double tol, int max_iter) {
    const std::size_t n = b.size();
    SolveReport report;
    const double b_norm = std::sqrt(dot(b, b));
    if (b_norm == 0.0) {
        std::fill(x.begin(), x.end(), 0.0);
        report.converged = true;
        return report;
    }

    std::vector<double> r(n), z(n), p(n), ap(n);
    project(x);
    auto true_residual = [&] {
        apply(std::span<const double>(x.data(), n), std::span<double>(ap));
        for (std::size_t k = 0; k < n; ++k) r[k] = b[k] - ap[k];
        project(std::span<double>(r));
        return std::sqrt(dot(r, r)) / b_norm;
    };

    double rel = true_residual();
    report.final_relative_residual = rel;
    if (rel <= tol) {
        report.converged = true;
        return report;
    }
    precondition(std::span<const double>(r), std::span<double>(z));
    project(std::span<double>(z));
    p = z;
    double rz = dot(r, z);

    while (report.iterations < max_iter) {
        apply(std::span<const double>(p), std::span<double>(ap));
        project(std::span<double>(ap));
        const double pap = dot(p, ap);
        if (!(pap > 0.0)) break;
        const double alpha = rz / pap;
        for (std::size_t k = 0; k < n; ++k) {
            x[k] += alpha * p[k];
            r[k] -= alpha * ap[k];
        }
        ++report.iterations;
        rel = std::sqrt(dot(r, r)) / b_norm;
        if (rel <= tol) {
            // the recursive residual drifts from the true one at high contrast
            rel = true_residual();
            if (rel <= tol) {
                report.final_relative_residual = rel;
                report.converged = true;
                return report;
            }
            precondition(std::span<const double>(r), std::span<double>(z));
            project(std::span<double>(z));
            p = z;
            rz = dot(r, z);
            continue;
        }
        precondition(std::span<const double>(r), std::span<double>(z));
        project(std::span<double>(z));
        const double rz_next = dot(r, z);
        const double beta = rz_next / rz;
        rz = rz_next;
        for (std::size_t k = 0; k < n; ++k) p[k] = z[k] + beta * p[k];
    }
    report.final_relative_residual = true_residual();
    report.converged = report.final_relative_residual <= tol;
    return report;
}

}  // namespace congestion::detail
