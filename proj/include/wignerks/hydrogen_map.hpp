#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

#include "wignerks/channels.hpp"
#include "wignerks/errors.hpp"
#include "wignerks/radial_functions.hpp"
#include "wignerks/rng.hpp"
#include "wignerks/spherical_harmonics.hpp"
#include "wignerks/sturm_liouville.hpp"
#include "wignerks/tridiagonal.hpp"

namespace wignerks {

// Even-tower 4D oscillator level: E = 2 ell + 2 + 2 m.
inline long oscillator4d_energy(long ell, long m) {
    if (ell < 0 || m < 0) throw DomainError("oscillator4d_energy: require ell, m >= 0");
    return 2 * ell + 2 + 2 * m;
}

// Radial problem for the constrained 4D oscillator channel after the
// substitution u = s^(3/2) R:
//   -1/2 u'' + [ (4q + 3/4)/(2 s^2) + s^2/2 ] u = E u.
// Only the bosonic sector is mapped; the partner sector enters through the
// y- channel eigenvalue, not through a separate potential.
inline SturmLiouvilleProblem build_oscillator4d_problem(const ChannelSpec& ch) {
    if (ch.sector != Sector::bosonic)
        throw DomainError("build_oscillator4d_problem: only the bosonic sector is mapped");
    const double coeff = to_double(centrifugal_coefficient(ch));
    return {[coeff](double s) { return 0.5 * coeff / (s * s) + 0.5 * s * s; }, nullptr};
}

// Radial problem for the Coulomb system in its oscillator-like form, after
// u = rho psi:
//   -1/2 u'' + [ ell(ell+1)/(2 rho^2) + 1/8 ] u = lambda * (1/(2 rho)) u.
// The eigenvalue lambda is dimensionless; weights stay on the right-hand side.
inline SturmLiouvilleProblem build_hydrogen_problem(long ell) {
    if (ell < 0) throw DomainError("build_hydrogen_problem: require ell >= 0");
    const double cc = 0.5 * static_cast<double>(ell) * (ell + 1);
    return {[cc](double rho) { return cc / (rho * rho) + 0.125; },
            [](double rho) { return 0.5 / rho; }};
}

struct MappingResult {
    double e_osc = 0.0;
    double lambda = 0.0;
    long n = 0;
    double lambda_residual = 0.0;  // | lambda - n |
    bool lambda_integral = false;  // residual within the configured tolerance
    double e_atomic = 0.0;         // -Z^2 / (2 N^2)
    double alpha = 0.0;            // sqrt(-8 E_a), the length scale rho = alpha r
};

inline double hydrogen_energy(double z, long n) {
    if (n < 1) throw DomainError("hydrogen_energy: require N >= 1");
    if (!(z > 0.0)) throw DomainError("hydrogen_energy: require Z > 0");
    return -z * z / (2.0 * static_cast<double>(n) * static_cast<double>(n));
}

// lambda = E_osc / 2; N = round(lambda) with the rounding residual reported
// rather than assumed zero; then E_a = -Z^2/(2 N^2) and alpha = sqrt(-8 E_a).
inline MappingResult map_to_hydrogen(double e_osc, double z, double tolerance = 1e-6) {
    if (!(e_osc > 0.0)) throw DomainError("map_to_hydrogen: require E_osc > 0");
    if (!(z > 0.0)) throw DomainError("map_to_hydrogen: require Z > 0");
    MappingResult r;
    r.e_osc = e_osc;
    r.lambda = 0.5 * e_osc;
    r.n = std::llround(r.lambda);
    if (r.n < 1) throw DomainError("map_to_hydrogen: lambda rounds below the ground level");
    r.lambda_residual = std::abs(r.lambda - static_cast<double>(r.n));
    r.lambda_integral = r.lambda_residual <= tolerance;
    r.e_atomic = hydrogen_energy(z, r.n);
    r.alpha = std::sqrt(-8.0 * r.e_atomic);
    return r;
}

struct HydrogenLevel {
    double z = 0.0;
    long n = 0;
    long ell = 0;
    long m = 0;
    double energy = 0.0;
};

// The N degenerate (ell, m) pairs with ell + m + 1 = N, one shared energy.
inline std::vector<HydrogenLevel> assemble_level(double z, long n) {
    if (n < 1) throw DomainError("assemble_level: require N >= 1");
    const double e = hydrogen_energy(z, n);
    std::vector<HydrogenLevel> levels;
    levels.reserve(static_cast<std::size_t>(n));
    for (long ell = 0; ell < n; ++ell) levels.push_back({z, n, ell, n - 1 - ell, e});
    return levels;
}

// Relative defect of the closed-form state in the discretized problem:
// samples u = rho^(ell+1) e^(-rho/2) L_m^(2 ell+1)(rho) (that is rho times
// the printed eigenfunction), applies (A - lambda W) with lambda = ell+m+1,
// and returns ||(A - lambda W) u|| / ||u|| over all grid rows.  Pure
// discretization error, O(h^2) on adequate boxes.
inline double residual_check(long ell, long m, const RadialGrid& grid) {
    if (ell < 0 || m < 0) throw DomainError("residual_check: require ell, m >= 0");
    const DiscretizedProblem dp = discretize(build_hydrogen_problem(ell), grid);
    const double lambda = static_cast<double>(ell + m + 1);
    std::vector<double> u(static_cast<std::size_t>(grid.n));
    const RadialEigenfunction spec{ell, m, RadialEigenfunction::Kind::hydrogen};
    for (long j = 0; j < grid.n; ++j) {
        const double rho = grid.node(j);
        u[static_cast<std::size_t>(j)] = rho * radial_eigenfunction(spec, rho);
    }
    return eigen_residual(dp.matrix, dp.weight, lambda, u);
}

// ---- Angular reduction checks -------------------------------------------

namespace detail {

// (1/sin t) d/dt ( sin t d/dt f ) by nested central differences.
template <typename F>
double theta_part_fd(F f, double theta, double h) {
    const auto flux = [&](double t) { return std::sin(t) * (f(t + h) - f(t - h)) / (2.0 * h); };
    return (flux(theta + h) - flux(theta - h)) / (2.0 * h * std::sin(theta));
}

}  // namespace detail

// Full angular bracket of the 4D radial reduction, all by central
// differences:
//   (1/sin t) dt sin t dt + (1/sin^2 t) dpp + (1/sin^2 t)(2 cos t dp + dw) dw
// applied to F(theta, phi, omega).
inline double angular_full_fd(const std::function<double(double, double, double)>& F,
                              double theta, double phi, double omega, double h) {
    const double inv_sin2 = 1.0 / (std::sin(theta) * std::sin(theta));
    const double th =
        detail::theta_part_fd([&](double t) { return F(t, phi, omega); }, theta, h);
    const double ph = (F(theta, phi + h, omega) - 2.0 * F(theta, phi, omega) +
                       F(theta, phi - h, omega)) /
                      (h * h);
    const double ww = (F(theta, phi, omega + h) - 2.0 * F(theta, phi, omega) +
                       F(theta, phi, omega - h)) /
                      (h * h);
    const double cross = (F(theta, phi + h, omega + h) - F(theta, phi + h, omega - h) -
                          F(theta, phi - h, omega + h) + F(theta, phi - h, omega - h)) /
                         (4.0 * h * h);
    return th + inv_sin2 * (ph + 2.0 * std::cos(theta) * cross + ww);
}

// Restricted bracket, the fiber derivatives dropped.
inline double angular_restricted_fd(const std::function<double(double, double)>& f,
                                    double theta, double phi, double h) {
    const double inv_sin2 = 1.0 / (std::sin(theta) * std::sin(theta));
    const double th = detail::theta_part_fd([&](double t) { return f(t, phi); }, theta, h);
    const double ph = (f(theta, phi + h) - 2.0 * f(theta, phi) + f(theta, phi - h)) / (h * h);
    return th + inv_sin2 * ph;
}

// Max |full - restricted| over seeded sample points for the
// fiber-independent extension F(t, p, w) = f(t, p).  The fiber derivative
// terms are computed literally and must annihilate up to finite-difference
// error.  Pole caps theta < 0.2 and theta > pi - 0.2 are excluded: the
// chart is singular there, the operator is not.
inline double constraint_reduction_check(const std::function<double(double, double)>& f,
                                         std::size_t samples, std::uint64_t seed = 42,
                                         double h = 1e-3) {
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        SplitMix64 g = sample_stream(seed, i);
        const double theta = g.next_in(0.2, M_PI - 0.2);
        const double phi = g.next_in(0.0, 2.0 * M_PI);
        const double omega = g.next_in(0.0, 4.0 * M_PI);
        const double full = angular_full_fd(
            [&](double t, double p, double) { return f(t, p); }, theta, phi, omega, h);
        const double restricted = angular_restricted_fd(f, theta, phi, h);
        worst = std::max(worst, std::abs(full - restricted));
    }
    return worst;
}

// Max relative defect of the eigenrelation -[angular bracket] Y = l(l+1) Y
// on seeded samples away from the poles; theta part by finite differences,
// phi part analytic (the harmonic's phi dependence is a pure phase).
// Normalization is l(l+1) times the largest sampled |Y|; for l = 0 both
// sides vanish and the raw maximum is returned.
inline double angular_l2_check(long l, long mz, std::size_t samples, std::uint64_t seed = 42,
                               double h = 1e-3) {
    if (std::abs(mz) > l) throw DomainError("angular_l2_check: require |mz| <= l");
    double worst = 0.0;
    double y_max = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        SplitMix64 g = sample_stream(seed, i);
        const double theta = g.next_in(0.2, M_PI - 0.2);
        const double phi = g.next_in(0.0, 2.0 * M_PI);
        const std::complex<double> y = spherical_harmonic(l, mz, theta, phi);
        const double inv_sin2 = 1.0 / (std::sin(theta) * std::sin(theta));
        const auto y_at = [&](double t) { return spherical_harmonic(l, mz, t, phi); };
        const std::complex<double> flux_p =
            std::sin(theta + h) * (y_at(theta + 2 * h) - y_at(theta)) / (2.0 * h);
        const std::complex<double> flux_m =
            std::sin(theta - h) * (y_at(theta) - y_at(theta - 2 * h)) / (2.0 * h);
        const std::complex<double> th = (flux_p - flux_m) / (2.0 * h * std::sin(theta));
        const std::complex<double> lhs =
            -(th + inv_sin2 * (-static_cast<double>(mz) * mz) * y);
        const std::complex<double> rhs = static_cast<double>(l) * (l + 1) * y;
        worst = std::max(worst, std::abs(lhs - rhs));
        y_max = std::max(y_max, std::abs(y));
    }
    if (l == 0) return worst;
    return worst / (static_cast<double>(l) * (l + 1) * y_max);
}

// Max scaled difference between the two printed closed forms under the
// substitution rho = s^2, at seeded random radii.
inline double substitution_identity_check(long ell, long m, std::size_t samples,
                                          std::uint64_t seed = 42) {
    const RadialEigenfunction osc{ell, m, RadialEigenfunction::Kind::oscillator4d};
    const RadialEigenfunction hyd{ell, m, RadialEigenfunction::Kind::hydrogen};
    double worst = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        SplitMix64 g = sample_stream(seed, i);
        const double s = g.next_in(0.1, 2.5);
        const double a = radial_eigenfunction(osc, s);
        const double b = radial_eigenfunction(hyd, s * s);
        worst = std::max(worst, std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}));
    }
    return worst;
}

}  // namespace wignerks
