#pragma once

#include <cmath>
#include <vector>

#include "wignerks/errors.hpp"
#include "wignerks/ext_scalar.hpp"
#include "wignerks/rational.hpp"

namespace wignerks {

// Exact value of a half-line Gaussian inner product.
//
//   value = q1 + q2*sqrt(2) + qpi*sqrt(pi) + q2pi*sqrt(2*pi)
//
// The (1, sqrt(pi)) components carry the raw moments; the sqrt(2) pair appears
// when a state with an odd number of ladder applications meets one with an
// even number.  The basis is closed under addition, rational scaling and
// ExtScalar scaling, which is everything an inner product needs.
struct MomentScalar {
    Rational q1;    // coefficient of 1
    Rational q2;    // coefficient of sqrt(2)
    Rational qpi;   // coefficient of sqrt(pi)
    Rational q2pi;  // coefficient of sqrt(2*pi)

    MomentScalar() : q1(0), q2(0), qpi(0), q2pi(0) {}
    MomentScalar(Rational a, Rational b, Rational c, Rational d)
        : q1(std::move(a)), q2(std::move(b)), qpi(std::move(c)), q2pi(std::move(d)) {}

    static MomentScalar zero() { return {}; }

    bool is_zero() const { return q1 == 0 && q2 == 0 && qpi == 0 && q2pi == 0; }

    double to_double() const {
        const double s2 = std::sqrt(2.0);
        const double spi = std::sqrt(M_PI);
        return wignerks::to_double(q1) + wignerks::to_double(q2) * s2 +
               wignerks::to_double(qpi) * spi + wignerks::to_double(q2pi) * s2 * spi;
    }

    friend MomentScalar operator+(const MomentScalar& a, const MomentScalar& b) {
        return {a.q1 + b.q1, a.q2 + b.q2, a.qpi + b.qpi, a.q2pi + b.q2pi};
    }
    friend MomentScalar operator-(const MomentScalar& a, const MomentScalar& b) {
        return {a.q1 - b.q1, a.q2 - b.q2, a.qpi - b.qpi, a.q2pi - b.q2pi};
    }
    friend MomentScalar operator*(const Rational& r, const MomentScalar& m) {
        return {r * m.q1, r * m.q2, r * m.qpi, r * m.q2pi};
    }
    // (r1 + r2*sqrt2) * m, using sqrt2*sqrt2 = 2.
    friend MomentScalar operator*(const ExtScalar& s, const MomentScalar& m) {
        return {s.rat * m.q1 + 2 * s.rad * m.q2, s.rat * m.q2 + s.rad * m.q1,
                s.rat * m.qpi + 2 * s.rad * m.q2pi, s.rat * m.q2pi + s.rad * m.qpi};
    }
    MomentScalar& operator+=(const MomentScalar& o) { return *this = *this + o; }

    friend bool operator==(const MomentScalar& a, const MomentScalar& b) {
        return a.q1 == b.q1 && a.q2 == b.q2 && a.qpi == b.qpi && a.q2pi == b.q2pi;
    }
    friend bool operator!=(const MomentScalar& a, const MomentScalar& b) { return !(a == b); }
};

// M(n) = integral_0^inf x^n exp(-x^2) dx, exact in the (1, sqrt(pi)) basis:
//   M(0) = sqrt(pi)/2,  M(1) = 1/2,  M(n) = (n-1)/2 * M(n-2).
inline MomentScalar half_line_moment(long n) {
    if (n < 0) throw DivergentIntegral("half_line_moment: power " + std::to_string(n));
    Rational factor(1);
    long k = n;
    while (k >= 2) {
        factor *= Rational(k - 1, 2);
        k -= 2;
    }
    if (k == 0) return {Rational(0), Rational(0), factor * Rational(1, 2), Rational(0)};
    return {factor * Rational(1, 2), Rational(0), Rational(0), Rational(0)};
}

}  // namespace wignerks
