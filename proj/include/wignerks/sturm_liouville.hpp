#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "wignerks/errors.hpp"
#include "wignerks/radial_grid.hpp"

namespace wignerks {

// -1/2 u'' + V(x) u = lambda w(x) u on a Dirichlet grid; w absent means the
// standard eigenproblem.
struct SturmLiouvilleProblem {
    std::function<double(double)> potential;
    std::function<double(double)> weight;  // empty: identity weight
};

struct TridiagonalSystem {
    std::vector<double> diag;
    std::vector<double> off;  // off[j] couples nodes j and j+1

    std::size_t size() const { return diag.size(); }
};

// Second-order central differences for -1/2 u'':
//   d_j = 1/h^2 + V(x_j),   e_j = -1/(2 h^2),
// plus the sampled weight diagonal when a weight is present.
struct DiscretizedProblem {
    TridiagonalSystem matrix;
    std::vector<double> weight;  // empty when the problem has unit weight
};

inline DiscretizedProblem discretize(const SturmLiouvilleProblem& problem,
                                     const RadialGrid& grid) {
    if (!problem.potential) throw DomainError("discretize: problem has no potential");
    DiscretizedProblem out;
    const std::size_t n = static_cast<std::size_t>(grid.n);
    out.matrix.diag.resize(n);
    out.matrix.off.assign(n > 0 ? n - 1 : 0, -0.5 / (grid.h * grid.h));
    const double inv_h2 = 1.0 / (grid.h * grid.h);
    for (long j = 0; j < grid.n; ++j) {
        const double x = grid.node(j);
        const double v = problem.potential(x);
        if (!std::isfinite(v))
            throw SingularPotential("discretize: potential not finite at x = " +
                                    std::to_string(x));
        out.matrix.diag[static_cast<std::size_t>(j)] = inv_h2 + v;
    }
    if (problem.weight) {
        out.weight.resize(n);
        for (long j = 0; j < grid.n; ++j) {
            const double w = problem.weight(grid.node(j));
            if (!std::isfinite(w))
                throw SingularPotential("discretize: weight not finite at x = " +
                                        std::to_string(grid.node(j)));
            out.weight[static_cast<std::size_t>(j)] = w;
        }
    }
    return out;
}

// Radial sector Hamiltonian on the half line:
// -1/2 u'' + [x^2/2 + k(k+1)/(2x^2)] u, the diagonal block with parameter k.
inline SturmLiouvilleProblem make_sector_problem(double k) {
    return {[k](double x) { return 0.5 * x * x + 0.5 * k * (k + 1.0) / (x * x); }, nullptr};
}

}  // namespace wignerks
