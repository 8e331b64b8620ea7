#pragma once

// Test-side oracles, kept independent of the library implementations they
// check: finite differences against closed-form derivatives, series forms
// against recurrences, and seeded random value generators.

#include <cmath>
#include <random>
#include <vector>

#include "wignerks/gaussian_poly.hpp"
#include "wignerks/spinor_poly.hpp"

namespace oracles {

// Central difference of a scalar function, O(h^2).
template <typename F>
double central_diff(F f, double x, double h) {
    return (f(x + h) - f(x - h)) / (2.0 * h);
}

// Random Gaussian-damped polynomial with small rational coefficients and
// offset in [min_offset, min_offset+2].  Deterministic for a given engine.
inline wignerks::GaussianPoly random_poly(std::mt19937& rng, long min_offset = 1) {
    std::uniform_int_distribution<long> off(min_offset, min_offset + 2);
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    const int n = len(rng);
    std::vector<wignerks::ExtScalar> coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        coeffs.emplace_back(wignerks::Rational(num(rng), den(rng)),
                            wignerks::Rational(num(rng), den(rng)));
    return wignerks::GaussianPoly(off(rng), std::move(coeffs));
}

inline wignerks::SpinorPoly random_spinor(std::mt19937& rng, long min_offset = 1) {
    return {random_poly(rng, min_offset), random_poly(rng, min_offset)};
}

// Generalized Laguerre polynomial by its finite series,
//   L_m^alpha(x) = sum_{k=0..m} (-1)^k C(m+alpha, m-k) x^k / k!,
// with the binomial evaluated as a product so alpha may be any real.
inline double laguerre_series(double alpha, int m, double x) {
    double sum = 0.0;
    for (int k = 0; k <= m; ++k) {
        // C(m+alpha, m-k) = prod_{j=1..m-k} (alpha + k + j) / j
        double binom = 1.0;
        for (int j = 1; j <= m - k; ++j) binom *= (alpha + k + j) / j;
        double xk_over_fact = 1.0;
        for (int j = 1; j <= k; ++j) xk_over_fact *= x / j;
        sum += ((k % 2 == 0) ? 1.0 : -1.0) * binom * xk_over_fact;
    }
    return sum;
}

}  // namespace oracles
