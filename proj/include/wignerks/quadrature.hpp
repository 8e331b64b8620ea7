#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "wignerks/errors.hpp"

namespace wignerks {

// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
// Legendre polynomial from the Chebyshev-like initial guess.  Accurate to
// machine precision for the modest orders used here.
struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

inline QuadratureRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: require n >= 1");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    // Nodes are symmetric; solve for the first half and mirror.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n and P'_n by the standard recurrences.
            double p_prev = 1.0, p = x;
            for (int k = 2; k <= n; ++k) {
                const double p_next = ((2.0 * k - 1.0) * x * p - (k - 1.0) * p_prev) / k;
                p_prev = p;
                p = p_next;
            }
            dp = n * (x * p - p_prev) / (x * x - 1.0);
            const double dx = p / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const std::size_t j = static_cast<std::size_t>(i);
        const std::size_t jr = static_cast<std::size_t>(n - 1 - i);
        rule.nodes[j] = -x;
        rule.nodes[jr] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[j] = w;
        rule.weights[jr] = w;
    }
    return rule;
}

// integral_a^b f(t) dt by an n-point Gauss-Legendre rule mapped onto [a, b].
template <typename F>
double integrate(F f, double a, double b, int n) {
    const QuadratureRule rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// L2 norm sqrt(integral_a^b f(t)^2 dt); measure factors (t^2, t^3, ...) are
// the caller's business, folded into f.
template <typename F>
double quadrature_norm(F f, double a, double b, int n) {
    return std::sqrt(integrate([&](double t) { const double v = f(t); return v * v; }, a, b, n));
}

}  // namespace wignerks
