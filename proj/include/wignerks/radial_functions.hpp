#pragma once

#include <cmath>

#include "wignerks/errors.hpp"
#include "wignerks/laguerre.hpp"

namespace wignerks {

// Closed-form radial eigenfunctions, unnormalized as printed:
//   oscillator4d:  R(s)   = s^(2 ell) e^(-s^2/2) L_m^(2 ell + 1)(s^2)
//   hydrogen:      psi(p) = p^ell     e^(-p/2)   L_m^(2 ell + 1)(p)
// The two are the same function under the substitution p = s^2, which is a
// tested identity rather than an assumption.
struct RadialEigenfunction {
    enum class Kind { oscillator4d, hydrogen };
    long ell = 0;
    long m = 0;
    Kind kind = Kind::hydrogen;
};

inline double radial_eigenfunction(const RadialEigenfunction& spec, double t) {
    if (spec.ell < 0 || spec.m < 0)
        throw DomainError("radial_eigenfunction: require ell, m >= 0");
    const double alpha = 2.0 * spec.ell + 1.0;
    if (spec.kind == RadialEigenfunction::Kind::oscillator4d) {
        const double s2 = t * t;
        return std::pow(t, 2.0 * spec.ell) * std::exp(-0.5 * s2) * laguerre(alpha, spec.m, s2);
    }
    return std::pow(t, static_cast<double>(spec.ell)) * std::exp(-0.5 * t) *
           laguerre(alpha, spec.m, t);
}

}  // namespace wignerks
