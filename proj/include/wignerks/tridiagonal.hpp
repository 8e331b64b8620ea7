#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "wignerks/errors.hpp"
#include "wignerks/rng.hpp"
#include "wignerks/sturm_liouville.hpp"

namespace wignerks {

struct EigenPair {
    double value = 0.0;
    std::vector<double> vector;
};

namespace detail {

// Smallest pivot magnitude tolerated in the LDL^T sweep; pivots closer to
// zero are pushed to -pivmin so the sign count stays well defined.
inline double pivmin_for(const TridiagonalSystem& sys) {
    double max_off_sq = 0.0;
    for (double e : sys.off) max_off_sq = std::max(max_off_sq, e * e);
    return std::max(max_off_sq * 1e-300, 1e-300);
}

}  // namespace detail

// Number of eigenvalues strictly below lambda: count of negative pivots in
// the LDL^T factorization of (A - lambda I).
inline std::size_t sturm_count(const TridiagonalSystem& sys, double lambda) {
    const double pivmin = detail::pivmin_for(sys);
    std::size_t count = 0;
    double q = 1.0;
    for (std::size_t j = 0; j < sys.size(); ++j) {
        const double off_sq = (j == 0) ? 0.0 : sys.off[j - 1] * sys.off[j - 1];
        q = sys.diag[j] - lambda - (j == 0 ? 0.0 : off_sq / q);
        if (std::abs(q) < pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

// Enclosing interval for the whole spectrum by Gershgorin discs.
inline std::pair<double, double> gershgorin_bounds(const TridiagonalSystem& sys) {
    double lo = sys.diag[0], hi = sys.diag[0];
    for (std::size_t j = 0; j < sys.size(); ++j) {
        const double r = (j > 0 ? std::abs(sys.off[j - 1]) : 0.0) +
                         (j + 1 < sys.size() ? std::abs(sys.off[j]) : 0.0);
        lo = std::min(lo, sys.diag[j] - r);
        hi = std::max(hi, sys.diag[j] + r);
    }
    return {lo, hi};
}

namespace detail {

// Solve (A - shift I) x = b in place by LU with partial pivoting on the
// tridiagonal band (one fill-in superdiagonal).  A zero pivot is replaced by
// a tiny multiple of the matrix scale; inverse iteration only needs the
// solve to stay finite and directionally correct.
inline void shifted_solve(const TridiagonalSystem& sys, double shift, std::vector<double>& x) {
    const std::size_t n = sys.size();
    std::vector<double> dl(n, 0.0), d(n, 0.0), du(n, 0.0), du2(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        d[j] = sys.diag[j] - shift;
        if (j + 1 < n) {
            dl[j + 1] = sys.off[j];
            du[j] = sys.off[j];
        }
    }
    double scale = 0.0;
    for (std::size_t j = 0; j < n; ++j)
        scale = std::max(scale, std::abs(d[j]) + (j + 1 < n ? std::abs(du[j]) : 0.0));
    const double tiny = std::max(scale, 1.0) * 1e-290;

    for (std::size_t j = 0; j + 1 < n; ++j) {
        if (std::abs(dl[j + 1]) > std::abs(d[j])) {
            std::swap(d[j], dl[j + 1]);
            std::swap(du[j], d[j + 1]);
            if (j + 2 < n) {
                du2[j] = du[j + 1];
                du[j + 1] = 0.0;
            }
            std::swap(x[j], x[j + 1]);
        }
        if (std::abs(d[j]) < tiny) d[j] = tiny;
        const double mult = dl[j + 1] / d[j];
        d[j + 1] -= mult * du[j];
        if (j + 2 < n) du[j + 1] -= mult * du2[j];
        x[j + 1] -= mult * x[j];
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = tiny;

    for (std::size_t jj = n; jj-- > 0;) {
        double v = x[jj];
        if (jj + 1 < n) v -= du[jj] * x[jj + 1];
        if (jj + 2 < n) v -= du2[jj] * x[jj + 2];
        x[jj] = v / d[jj];
    }
}

inline void normalize(std::vector<double>& v) {
    double norm = 0.0;
    for (double t : v) norm += t * t;
    norm = std::sqrt(norm);
    if (norm == 0.0) return;
    for (double& t : v) t /= norm;
}

inline void fix_sign(std::vector<double>& v) {
    std::size_t arg = 0;
    for (std::size_t j = 1; j < v.size(); ++j)
        if (std::abs(v[j]) > std::abs(v[arg])) arg = j;
    if (v[arg] < 0.0)
        for (double& t : v) t = -t;
}

}  // namespace detail

// k smallest eigenpairs.  Each eigenvalue is located by bisection on the
// Sturm count; each eigenvector by two rounds of inverse iteration from a
// seeded random start, so repeated runs are bit-identical.
inline std::vector<EigenPair> eigen_lowest(const TridiagonalSystem& sys, std::size_t k,
                                           std::uint64_t seed = 42) {
    const std::size_t n = sys.size();
    if (k > n) throw DomainError("eigen_lowest: k exceeds matrix size");
    for (double v : sys.diag)
        if (!std::isfinite(v))
            throw ConvergenceFailure("eigen_lowest: non-finite diagonal entry");
    for (double v : sys.off)
        if (!std::isfinite(v))
            throw ConvergenceFailure("eigen_lowest: non-finite off-diagonal entry");

    auto [glo, ghi] = gershgorin_bounds(sys);
    std::vector<EigenPair> out(k);
    for (std::size_t i = 0; i < k; ++i) {
        double lo = glo, hi = ghi;
        // Invariant: count(lo) <= i < count(hi).
        for (int iter = 0; iter < 200; ++iter) {
            const double mid = 0.5 * (lo + hi);
            if (hi - lo <= 1e-14 * std::max(1.0, std::abs(mid))) break;
            if (sturm_count(sys, mid) >= i + 1)
                hi = mid;
            else
                lo = mid;
        }
        const double lambda = 0.5 * (lo + hi);

        std::vector<double> v(n);
        SplitMix64 g = sample_stream(seed, i);
        for (double& t : v) t = g.next_in(-0.5, 0.5);
        detail::normalize(v);
        for (int pass = 0; pass < 2; ++pass) {
            detail::shifted_solve(sys, lambda, v);
            detail::normalize(v);
        }
        detail::fix_sign(v);
        out[i] = {lambda, std::move(v)};
    }
    return out;
}

// || A v - lambda W v ||_2 / || v ||_2 ; empty weight means W = I.
inline double eigen_residual(const TridiagonalSystem& sys, const std::vector<double>& weight,
                             double lambda, const std::vector<double>& v) {
    const std::size_t n = sys.size();
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double r = sys.diag[j] * v[j];
        if (j > 0) r += sys.off[j - 1] * v[j - 1];
        if (j + 1 < n) r += sys.off[j] * v[j + 1];
        r -= lambda * (weight.empty() ? v[j] : weight[j] * v[j]);
        num += r * r;
        den += v[j] * v[j];
    }
    return std::sqrt(num / den);
}

// A u = lambda W u with W = diag(w) > 0, reduced by the symmetric congruence
// B = W^(-1/2) A W^(-1/2); eigenvalues carry over, eigenvectors come back
// through u = W^(-1/2) u~.
inline std::vector<EigenPair> eigen_generalized(const TridiagonalSystem& sys,
                                                const std::vector<double>& w, std::size_t k,
                                                std::uint64_t seed = 42) {
    const std::size_t n = sys.size();
    if (w.size() != n) throw DomainError("eigen_generalized: weight length mismatch");
    for (double wi : w)
        if (!(wi > 0.0)) throw NonPositiveWeight("eigen_generalized: weight entries must be > 0");

    TridiagonalSystem reduced;
    reduced.diag.resize(n);
    reduced.off.resize(n > 0 ? n - 1 : 0);
    for (std::size_t j = 0; j < n; ++j) reduced.diag[j] = sys.diag[j] / w[j];
    for (std::size_t j = 0; j + 1 < n; ++j)
        reduced.off[j] = sys.off[j] / std::sqrt(w[j] * w[j + 1]);

    std::vector<EigenPair> pairs = eigen_lowest(reduced, k, seed);
    for (EigenPair& p : pairs) {
        for (std::size_t j = 0; j < n; ++j) p.vector[j] /= std::sqrt(w[j]);
        detail::normalize(p.vector);
        detail::fix_sign(p.vector);
    }
    return pairs;
}

}  // namespace wignerks
