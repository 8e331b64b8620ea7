#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wignerks/errors.hpp"
#include "wignerks/ext_scalar.hpp"
#include "wignerks/moments.hpp"

namespace wignerks {

// A Gaussian-damped polynomial on the half line,
//
//   f(x) = exp(-x^2/2) * sum_k coeffs[k] * x^(offset + k),
//
// with exact ExtScalar coefficients.  The representation is kept normalized:
// coeffs never starts or ends with a zero, and the zero function is the empty
// coefficient list with offset 0.  Negative offsets are legal mid-computation;
// only inner products and physical states care about admissibility.
struct GaussianPoly {
    long offset = 0;
    std::vector<ExtScalar> coeffs;

    GaussianPoly() = default;
    GaussianPoly(long p, std::vector<ExtScalar> c) : offset(p), coeffs(std::move(c)) {
        normalize();
    }

    static GaussianPoly zero() { return {}; }
    // c * x^p * exp(-x^2/2)
    static GaussianPoly monomial(long p, ExtScalar c = ExtScalar::one()) {
        return GaussianPoly(p, {std::move(c)});
    }

    bool is_zero() const { return coeffs.empty(); }
    long degree() const { return offset + static_cast<long>(coeffs.size()) - 1; }

    void normalize() {
        std::size_t lead = 0;
        while (lead < coeffs.size() && coeffs[lead].is_zero()) ++lead;
        if (lead == coeffs.size()) {
            coeffs.clear();
            offset = 0;
            return;
        }
        std::size_t tail = coeffs.size();
        while (coeffs[tail - 1].is_zero()) --tail;
        if (lead > 0 || tail < coeffs.size())
            coeffs = std::vector<ExtScalar>(coeffs.begin() + lead, coeffs.begin() + tail);
        offset += static_cast<long>(lead);
    }

    // Coefficient of x^q * exp(-x^2/2), zero outside the stored window.
    ExtScalar coeff_at(long q) const {
        const long k = q - offset;
        if (k < 0 || k >= static_cast<long>(coeffs.size())) return ExtScalar::zero();
        return coeffs[static_cast<std::size_t>(k)];
    }

    friend GaussianPoly operator+(const GaussianPoly& a, const GaussianPoly& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const long lo = std::min(a.offset, b.offset);
        const long hi = std::max(a.degree(), b.degree());
        std::vector<ExtScalar> sum(static_cast<std::size_t>(hi - lo + 1), ExtScalar::zero());
        for (std::size_t k = 0; k < a.coeffs.size(); ++k)
            sum[static_cast<std::size_t>(a.offset - lo) + k] += a.coeffs[k];
        for (std::size_t k = 0; k < b.coeffs.size(); ++k)
            sum[static_cast<std::size_t>(b.offset - lo) + k] += b.coeffs[k];
        return GaussianPoly(lo, std::move(sum));
    }
    friend GaussianPoly operator-(const GaussianPoly& a, const GaussianPoly& b) {
        return a + (ExtScalar(-1) * b);
    }
    friend GaussianPoly operator*(const ExtScalar& s, const GaussianPoly& f) {
        if (s.is_zero() || f.is_zero()) return GaussianPoly::zero();
        std::vector<ExtScalar> scaled;
        scaled.reserve(f.coeffs.size());
        for (const auto& c : f.coeffs) scaled.push_back(s * c);
        return GaussianPoly(f.offset, std::move(scaled));
    }
    friend bool operator==(const GaussianPoly& a, const GaussianPoly& b) {
        return a.offset == b.offset && a.coeffs == b.coeffs;
    }
    friend bool operator!=(const GaussianPoly& a, const GaussianPoly& b) { return !(a == b); }
};

// d/dx, term by term: d/dx[x^q e^(-x^2/2)] = (q x^(q-1) - x^(q+1)) e^(-x^2/2).
inline GaussianPoly gp_differentiate(const GaussianPoly& f) {
    if (f.is_zero()) return GaussianPoly::zero();
    // Result powers span [offset-1, degree+1].
    std::vector<ExtScalar> out(f.coeffs.size() + 2, ExtScalar::zero());
    for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
        const long q = f.offset + static_cast<long>(k);
        out[k] += Rational(q) * f.coeffs[k];
        out[k + 2] -= f.coeffs[k];
    }
    return GaussianPoly(f.offset - 1, std::move(out));
}

inline GaussianPoly gp_mul_x(const GaussianPoly& f) {
    if (f.is_zero()) return GaussianPoly::zero();
    GaussianPoly g = f;
    ++g.offset;
    return g;
}

inline GaussianPoly gp_div_x(const GaussianPoly& f) {
    if (f.is_zero()) return GaussianPoly::zero();
    GaussianPoly g = f;
    --g.offset;
    return g;
}

// <f, g> = integral_0^inf f(x) g(x) dx, exact.  The product integrand is
// exp(-x^2) times a polynomial, so each term pair reduces to the moment
// M(n) = integral_0^inf x^n exp(-x^2) dx via the closed recurrence.
inline MomentScalar gp_inner(const GaussianPoly& f, const GaussianPoly& g) {
    MomentScalar acc = MomentScalar::zero();
    for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
        for (std::size_t j = 0; j < g.coeffs.size(); ++j) {
            const ExtScalar c = f.coeffs[i] * g.coeffs[j];
            if (c.is_zero()) continue;
            const long n = f.offset + static_cast<long>(i) + g.offset + static_cast<long>(j);
            if (n < 0)
                throw DivergentIntegral("gp_inner: term pair with total power " +
                                        std::to_string(n));
            acc += c * half_line_moment(n);
        }
    }
    return acc;
}

// Floating evaluation at x > 0: Horner on the polynomial part, then the
// offset power and the Gaussian factor.
inline double gp_eval(const GaussianPoly& f, double x) {
    if (f.is_zero()) return 0.0;
    double poly = 0.0;
    for (std::size_t k = f.coeffs.size(); k-- > 0;) poly = poly * x + f.coeffs[k].to_double();
    return poly * std::pow(x, static_cast<double>(f.offset)) * std::exp(-0.5 * x * x);
}

}  // namespace wignerks
