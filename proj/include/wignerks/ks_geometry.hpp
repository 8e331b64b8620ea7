#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include "wignerks/errors.hpp"
#include "wignerks/parallel.hpp"
#include "wignerks/rng.hpp"

namespace wignerks {

// 4D hyperspherical coordinates with half-angle structure: theta and phi are
// the usual polar/azimuthal pair after projection, omega is the fiber angle
// that the projection must not see.
struct HyperCoords {
    double s = 0.0;
    double theta = 0.0;
    double phi = 0.0;
    double omega = 0.0;
};

struct FourVector {
    double y1 = 0.0, y2 = 0.0, y3 = 0.0, y4 = 0.0;
    double norm_sq() const { return y1 * y1 + y2 * y2 + y3 * y3 + y4 * y4; }
};

struct SpinorZ {
    std::complex<double> z1{0.0, 0.0};
    std::complex<double> z2{0.0, 0.0};
    double norm_sq() const { return std::norm(z1) + std::norm(z2); }
};

struct ThreeVector {
    double rho1 = 0.0, rho2 = 0.0, rho3 = 0.0;
    double norm() const { return std::sqrt(rho1 * rho1 + rho2 * rho2 + rho3 * rho3); }
};

inline void validate_ranges(const HyperCoords& c) {
    if (!(c.s >= 0.0)) throw RangeError("HyperCoords: require s >= 0");
    if (!(c.theta >= 0.0 && c.theta <= M_PI))
        throw RangeError("HyperCoords: require 0 <= theta <= pi");
    if (!(c.phi >= 0.0 && c.phi <= 2.0 * M_PI))
        throw RangeError("HyperCoords: require 0 <= phi <= 2 pi");
    if (!(c.omega >= 0.0 && c.omega <= 4.0 * M_PI))
        throw RangeError("HyperCoords: require 0 <= omega <= 4 pi");
}

// y1 = s cos(t/2) cos((f-w)/2),  y2 = s cos(t/2) sin((f-w)/2),
// y3 = s sin(t/2) cos((f+w)/2),  y4 = s sin(t/2) sin((f+w)/2).
inline FourVector to_cartesian4(const HyperCoords& c) {
    validate_ranges(c);
    const double ch = std::cos(0.5 * c.theta), sh = std::sin(0.5 * c.theta);
    const double dm = 0.5 * (c.phi - c.omega), dp = 0.5 * (c.phi + c.omega);
    return {c.s * ch * std::cos(dm), c.s * ch * std::sin(dm),
            c.s * sh * std::cos(dp), c.s * sh * std::sin(dp)};
}

// Two ways of packaging the four real coordinates into a spinor:
//  - cartesian_pairing: z1 = y1 + i y2, z2 = y3 + i y4.  Under this pairing
//    z1* z2 = (s^2/2) sin(theta) e^(i omega), so the bilinear projection
//    rotates with the fiber angle instead of phi.
//  - projection_aligned (default): conjugate the z1 phase (z1 = y1 - i y2),
//    giving z1* z2 = (s^2/2) sin(theta) e^(i phi); the projection is then
//    fiber-independent and lands exactly on the 3D spherical form.
enum class SpinorConvention { projection_aligned, cartesian_pairing };

inline SpinorZ to_spinor(const HyperCoords& c,
                         SpinorConvention conv = SpinorConvention::projection_aligned) {
    validate_ranges(c);
    const double ch = std::cos(0.5 * c.theta), sh = std::sin(0.5 * c.theta);
    const double dm = 0.5 * (c.phi - c.omega), dp = 0.5 * (c.phi + c.omega);
    const double sign = (conv == SpinorConvention::projection_aligned) ? -1.0 : 1.0;
    return {c.s * ch * std::complex<double>(std::cos(dm), sign * std::sin(dm)),
            c.s * sh * std::complex<double>(std::cos(dp), std::sin(dp))};
}

// rho_i = sum_ab z_a* (sigma_i)_ab z_b:
// rho1 = 2 Re(z1* z2), rho2 = 2 Im(z1* z2), rho3 = |z1|^2 - |z2|^2.
inline ThreeVector ks_project(const SpinorZ& z) {
    const std::complex<double> cross = std::conj(z.z1) * z.z2;
    return {2.0 * cross.real(), 2.0 * cross.imag(), std::norm(z.z1) - std::norm(z.z2)};
}

// The 3D point in plain spherical form with rho = s^2; the angles are not
// halved here.
inline ThreeVector spherical3(const HyperCoords& c) {
    validate_ranges(c);
    const double rho = c.s * c.s;
    const double st = std::sin(c.theta);
    return {rho * st * std::cos(c.phi), rho * st * std::sin(c.phi), rho * std::cos(c.theta)};
}

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2c {
    std::complex<double> a, b, c, d;
};

// |(Uz)^dag (Uz) - z^dag z| for a unitary U with det 1.  The preconditions
// are verified numerically, not trusted.
inline double su2_invariance_check(const SpinorZ& z, const Mat2c& u) {
    const double tol = 1e-12;
    // Entries of u^dag u against the identity.
    const double g11 = std::norm(u.a) + std::norm(u.c);
    const double g22 = std::norm(u.b) + std::norm(u.d);
    const std::complex<double> g12 = std::conj(u.a) * u.b + std::conj(u.c) * u.d;
    if (std::abs(g11 - 1.0) > tol || std::abs(g22 - 1.0) > tol || std::abs(g12) > tol)
        throw NotUnitary("su2_invariance_check: u^dag u deviates from identity");
    const std::complex<double> det = u.a * u.d - u.b * u.c;
    if (std::abs(det - 1.0) > tol)
        throw NotUnitary("su2_invariance_check: det(u) deviates from 1");
    const SpinorZ uz{u.a * z.z1 + u.b * z.z2, u.c * z.z1 + u.d * z.z2};
    return std::abs(uz.norm_sq() - z.norm_sq());
}

// Uniform SU(2) element from a uniform unit quaternion
// (q0 + i q1 sigma1 + i q2 sigma2 + i q3 sigma3).
inline Mat2c random_su2(SplitMix64& g) {
    const double u1 = g.next_unit(), u2 = g.next_unit(), u3 = g.next_unit();
    const double r1 = std::sqrt(1.0 - u1), r2 = std::sqrt(u1);
    const double q0 = r1 * std::sin(2.0 * M_PI * u2), q1 = r1 * std::cos(2.0 * M_PI * u2);
    const double q2 = r2 * std::sin(2.0 * M_PI * u3), q3 = r2 * std::cos(2.0 * M_PI * u3);
    return {{q0, q3}, {q2, q1}, {-q2, q1}, {q0, -q3}};
}

// Maxima of every geometric invariant's violation over a seeded sample set.
struct KsInvariantReport {
    double norm4 = 0.0;          // | sum y_i^2 - s^2 |
    double spinor_norm = 0.0;    // | |z1|^2 + |z2|^2 - s^2 |
    double projection = 0.0;     // | ks_project(to_spinor(c)) - spherical3(c) |
    double fiber_shift = 0.0;    // projection change under an independent omega redraw
    double double_cover = 0.0;   // z(omega + 2 pi) + z(omega), and projection equality
    double su2 = 0.0;            // | |Uz|^2 - |z|^2 |
    std::uint64_t samples = 0;

    double max_all() const {
        return std::max({norm4, spinor_norm, projection, fiber_shift, double_cover, su2});
    }
    bool passed(double tol) const { return max_all() <= tol; }
};

namespace detail {
inline double max_component_diff(const ThreeVector& a, const ThreeVector& b) {
    return std::max({std::abs(a.rho1 - b.rho1), std::abs(a.rho2 - b.rho2),
                     std::abs(a.rho3 - b.rho3)});
}
}  // namespace detail

// Runs the full invariant battery on `samples` deterministic random
// coordinates.  Each sample draws from its own (seed, index) stream, so the
// report does not depend on the thread count.
inline KsInvariantReport run_ks_invariants(
    std::uint64_t seed, std::uint64_t samples, unsigned threads = 0,
    SpinorConvention conv = SpinorConvention::projection_aligned) {
    struct Dev {
        double v[6] = {0, 0, 0, 0, 0, 0};
    };
    std::vector<Dev> devs(samples);
    parallel_for(samples, threads, [&](std::size_t i) {
        SplitMix64 g = sample_stream(seed, i);
        const double s = g.next_in(0.05, 2.0);
        const double theta = g.next_in(0.0, M_PI);
        const double phi = g.next_in(0.0, 2.0 * M_PI);
        const double omega = g.next_in(0.0, 4.0 * M_PI);
        const double omega2 = g.next_in(0.0, 4.0 * M_PI);
        const double omega_dc = g.next_in(0.0, 2.0 * M_PI);

        const HyperCoords c{s, theta, phi, omega};
        Dev& d = devs[i];
        const double s2 = s * s;
        d.v[0] = std::abs(to_cartesian4(c).norm_sq() - s2);

        const SpinorZ z = to_spinor(c, conv);
        d.v[1] = std::abs(z.norm_sq() - s2);

        const ThreeVector proj = ks_project(z);
        d.v[2] = detail::max_component_diff(proj, spherical3(c));

        const ThreeVector proj2 = ks_project(to_spinor({s, theta, phi, omega2}, conv));
        d.v[3] = detail::max_component_diff(proj, proj2);

        const SpinorZ za = to_spinor({s, theta, phi, omega_dc}, conv);
        const SpinorZ zb = to_spinor({s, theta, phi, omega_dc + 2.0 * M_PI}, conv);
        d.v[4] = std::max({std::abs(zb.z1 + za.z1), std::abs(zb.z2 + za.z2),
                           detail::max_component_diff(ks_project(za), ks_project(zb))});

        const Mat2c u = random_su2(g);
        d.v[5] = su2_invariance_check(z, u);
    });
    KsInvariantReport rep;
    rep.samples = samples;
    for (const Dev& d : devs) {
        rep.norm4 = std::max(rep.norm4, d.v[0]);
        rep.spinor_norm = std::max(rep.spinor_norm, d.v[1]);
        rep.projection = std::max(rep.projection, d.v[2]);
        rep.fiber_shift = std::max(rep.fiber_shift, d.v[3]);
        rep.double_cover = std::max(rep.double_cover, d.v[4]);
        rep.su2 = std::max(rep.su2, d.v[5]);
    }
    return rep;
}

}  // namespace wignerks
