#pragma once

#include "wignerks/gaussian_poly.hpp"

namespace wignerks {

// Two-component state (upper, lower) with GaussianPoly entries.  The grading
// operator Sigma3 acts as +1 on the upper component and -1 on the lower, so
// even-parity states live entirely in the upper slot and odd-parity states in
// the lower.
struct SpinorPoly {
    GaussianPoly upper;
    GaussianPoly lower;

    SpinorPoly() = default;
    SpinorPoly(GaussianPoly up, GaussianPoly lo)
        : upper(std::move(up)), lower(std::move(lo)) {}

    static SpinorPoly zero() { return {}; }

    bool is_zero() const { return upper.is_zero() && lower.is_zero(); }
    // Sigma3-parity predicates: exactly one component nonzero.
    bool is_even_parity() const { return !upper.is_zero() && lower.is_zero(); }
    bool is_odd_parity() const { return upper.is_zero() && !lower.is_zero(); }

    friend SpinorPoly operator+(const SpinorPoly& a, const SpinorPoly& b) {
        return {a.upper + b.upper, a.lower + b.lower};
    }
    friend SpinorPoly operator-(const SpinorPoly& a, const SpinorPoly& b) {
        return {a.upper - b.upper, a.lower - b.lower};
    }
    friend SpinorPoly operator*(const ExtScalar& s, const SpinorPoly& f) {
        return {s * f.upper, s * f.lower};
    }
    friend bool operator==(const SpinorPoly& a, const SpinorPoly& b) {
        return a.upper == b.upper && a.lower == b.lower;
    }
    friend bool operator!=(const SpinorPoly& a, const SpinorPoly& b) { return !(a == b); }
};

// Pauli-type matrices acting on the two components.
inline SpinorPoly apply_sigma1(const SpinorPoly& f) { return {f.lower, f.upper}; }
inline SpinorPoly apply_sigma3(const SpinorPoly& f) {
    return {f.upper, ExtScalar(-1) * f.lower};
}

inline MomentScalar sp_inner(const SpinorPoly& f, const SpinorPoly& g) {
    return gp_inner(f.upper, g.upper) + gp_inner(f.lower, g.lower);
}

}  // namespace wignerks
