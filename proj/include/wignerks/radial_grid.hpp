#pragma once

#include <vector>

#include "wignerks/errors.hpp"

namespace wignerks {

// Uniform grid of unknowns x_j = x_min + j h, j = 0..n-1, with homogeneous
// Dirichlet values one step outside both ends (at x_min - h and x_max + h).
// dirichlet_box(a, b, n) therefore pins the solution to zero exactly at a
// and b; from_origin places the inner wall at the coordinate singularity 0.
struct RadialGrid {
    double x_min = 0.0;
    double x_max = 0.0;
    long n = 0;
    double h = 0.0;

    static RadialGrid dirichlet_box(double a, double b, long n) {
        if (n < 1) throw DomainError("RadialGrid: require n >= 1");
        if (!(b > a)) throw DomainError("RadialGrid: require b > a");
        RadialGrid g;
        g.n = n;
        g.h = (b - a) / static_cast<double>(n + 1);
        g.x_min = a + g.h;
        g.x_max = b - g.h;
        return g;
    }

    static RadialGrid from_origin(double wall, long n) { return dirichlet_box(0.0, wall, n); }

    double node(long j) const { return x_min + static_cast<double>(j) * h; }

    std::vector<double> nodes() const {
        std::vector<double> xs(static_cast<std::size_t>(n));
        for (long j = 0; j < n; ++j) xs[static_cast<std::size_t>(j)] = node(j);
        return xs;
    }
};

}  // namespace wignerks
