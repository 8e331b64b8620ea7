#pragma once

#include <cmath>
#include <complex>

#include "wignerks/errors.hpp"

namespace wignerks {

// Fully normalized associated Legendre value P~_l^m(cos theta), m >= 0,
// defined so that Y_l^m = P~_l^m(cos theta) e^(i m phi) is orthonormal on
// the sphere.  Diagonal-then-upward recurrence, stable for the small l used
// here and far beyond; Condon-Shortley phase included in the diagonal step.
inline double normalized_legendre(long l, long m, double theta) {
    const double ct = std::cos(theta);
    const double st = std::sin(theta);
    // P~_0^0 = 1/sqrt(4 pi)
    double pmm = 1.0 / std::sqrt(4.0 * M_PI);
    for (long k = 1; k <= m; ++k)
        pmm *= -std::sqrt((2.0 * k + 1.0) / (2.0 * k)) * st;
    if (l == m) return pmm;
    // P~_{m+1}^m = sqrt(2m+3) cos(theta) P~_m^m
    double p_prev = pmm;
    double p_cur = std::sqrt(2.0 * m + 3.0) * ct * pmm;
    for (long k = m + 2; k <= l; ++k) {
        const double a = std::sqrt((4.0 * k * k - 1.0) / (static_cast<double>(k) * k - m * m));
        const double b =
            std::sqrt(((2.0 * k + 1.0) * ((k - 1.0) * (k - 1.0) - m * m)) /
                      ((2.0 * k - 3.0) * (static_cast<double>(k) * k - m * m)));
        const double p_next = a * ct * p_cur - b * p_prev;
        p_prev = p_cur;
        p_cur = p_next;
    }
    return p_cur;
}

// Orthonormal scalar spherical harmonic Y_l^mz(theta, phi).
inline std::complex<double> spherical_harmonic(long l, long mz, double theta, double phi) {
    if (l < 0) throw DomainError("spherical_harmonic: require l >= 0");
    if (std::abs(mz) > l) throw DomainError("spherical_harmonic: require |mz| <= l");
    const long m = std::abs(mz);
    const double plm = normalized_legendre(l, m, theta);
    const std::complex<double> phase(std::cos(m * phi), std::sin(m * phi));
    std::complex<double> y = plm * phase;
    if (mz < 0) {
        y = std::conj(y);
        if (m % 2 != 0) y = -y;
    }
    return y;
}

}  // namespace wignerks
