#pragma once

#include <cmath>

#include "wignerks/rational.hpp"

namespace wignerks {

// Element of the quadratic field Q(sqrt2): value = rat + rad * sqrt(2).
// Closed under ring operations (sqrt2 * sqrt2 = 2); equality is exact and
// component-wise.  This is the coefficient field of the ladder operators,
// whose overall 1/sqrt(2) factor lives here as (0, 1/2).
struct ExtScalar {
    Rational rat;  // coefficient of 1
    Rational rad;  // coefficient of sqrt(2)

    ExtScalar() = default;
    ExtScalar(Rational r1, Rational r2) : rat(std::move(r1)), rad(std::move(r2)) {}
    explicit ExtScalar(Rational r1) : rat(std::move(r1)), rad(0) {}
    explicit ExtScalar(long v) : rat(v), rad(0) {}

    static ExtScalar zero() { return ExtScalar{Rational(0), Rational(0)}; }
    static ExtScalar one() { return ExtScalar{Rational(1), Rational(0)}; }
    static ExtScalar sqrt2() { return ExtScalar{Rational(0), Rational(1)}; }
    static ExtScalar inv_sqrt2() { return ExtScalar{Rational(0), Rational(1, 2)}; }

    bool is_zero() const { return rat == 0 && rad == 0; }

    double to_double() const {
        return wignerks::to_double(rat) + wignerks::to_double(rad) * std::sqrt(2.0);
    }

    friend ExtScalar operator+(const ExtScalar& a, const ExtScalar& b) {
        return {a.rat + b.rat, a.rad + b.rad};
    }
    friend ExtScalar operator-(const ExtScalar& a, const ExtScalar& b) {
        return {a.rat - b.rat, a.rad - b.rad};
    }
    friend ExtScalar operator-(const ExtScalar& a) { return {-a.rat, -a.rad}; }
    friend ExtScalar operator*(const ExtScalar& a, const ExtScalar& b) {
        return {a.rat * b.rat + 2 * a.rad * b.rad, a.rat * b.rad + a.rad * b.rat};
    }
    friend ExtScalar operator*(const Rational& r, const ExtScalar& a) {
        return {r * a.rat, r * a.rad};
    }
    friend ExtScalar operator*(const ExtScalar& a, const Rational& r) { return r * a; }

    ExtScalar& operator+=(const ExtScalar& o) { return *this = *this + o; }
    ExtScalar& operator-=(const ExtScalar& o) { return *this = *this - o; }
    ExtScalar& operator*=(const ExtScalar& o) { return *this = *this * o; }

    friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
        return a.rat == b.rat && a.rad == b.rad;
    }
    friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }
};

}  // namespace wignerks
