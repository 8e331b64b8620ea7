#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "wignerks/wigner_algebra.hpp"

namespace wignerks {

// Outcome of one defining relation applied to one basis element.  The
// residual is kept exactly; passed means it is the exact zero function.
// residual_norm is the coefficient 1-norm, reported for diagnostics (it is
// well defined even when the residual carries negative powers of x).
struct AlgebraReport {
    std::string relation;
    std::size_t basis_index = 0;
    SpinorPoly residual;
    double residual_norm = 0.0;
    bool passed = false;
};

inline double coeff_norm(const GaussianPoly& g) {
    double n = 0.0;
    for (const auto& c : g.coeffs) n += std::abs(c.to_double());
    return n;
}

inline AlgebraReport make_report(std::string relation, std::size_t idx, SpinorPoly residual) {
    AlgebraReport rep;
    rep.relation = std::move(relation);
    rep.basis_index = idx;
    rep.passed = residual.is_zero();
    rep.residual_norm = coeff_norm(residual.upper) + coeff_norm(residual.lower);
    rep.residual = std::move(residual);
    return rep;
}

inline bool all_passed(const std::vector<AlgebraReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return false;
    return true;
}

// The defining relations, each as an exact residual on a given state:
//   [H, a+-] psi -+ a+- psi
//   [a-, a+] psi - (1 + c Sigma3) psi
//   (Sigma3 a+- + a+- Sigma3) psi
//   R^2 psi - psi           with R = Sigma3
inline std::vector<AlgebraReport> verify_wh_algebra(const WignerParams& p,
                                                    const std::vector<SpinorPoly>& basis) {
    if (basis.empty()) throw DomainError("verify_wh_algebra: empty basis");
    std::vector<AlgebraReport> out;
    out.reserve(basis.size() * 6);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const SpinorPoly& psi = basis[i];

        const SpinorPoly ap = apply_raising(p, psi);
        const SpinorPoly am = apply_lowering(p, psi);
        const SpinorPoly hpsi = apply_hamiltonian(p, psi);

        out.push_back(make_report(
            "[H,a+] - a+", i,
            apply_hamiltonian(p, ap) - apply_raising(p, hpsi) - ap));
        out.push_back(make_report(
            "[H,a-] + a-", i,
            apply_hamiltonian(p, am) - apply_lowering(p, hpsi) + am));

        const SpinorPoly comm = apply_lowering(p, ap) - apply_raising(p, am);
        const SpinorPoly rhs = psi + ExtScalar(p.c) * apply_sigma3(psi);
        out.push_back(make_report("[a-,a+] - (1 + c*Sigma3)", i, comm - rhs));

        out.push_back(make_report(
            "{Sigma3,a+}", i, apply_sigma3(ap) + apply_raising(p, apply_sigma3(psi))));
        out.push_back(make_report(
            "{Sigma3,a-}", i, apply_sigma3(am) + apply_lowering(p, apply_sigma3(psi))));

        out.push_back(make_report("R^2 - 1", i, apply_sigma3(apply_sigma3(psi)) - psi));
    }
    return out;
}

// osp(1|2) sector: with J+- = (a+-)^2, check [H, J+-] psi -+ 2 J+- psi.
inline std::vector<AlgebraReport> verify_osp12(const WignerParams& p,
                                               const std::vector<SpinorPoly>& basis) {
    if (basis.empty()) throw DomainError("verify_osp12: empty basis");
    std::vector<AlgebraReport> out;
    out.reserve(basis.size() * 2);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const SpinorPoly& psi = basis[i];
        const SpinorPoly jp = apply_raising(p, apply_raising(p, psi));
        const SpinorPoly jm = apply_lowering(p, apply_lowering(p, psi));
        const SpinorPoly hpsi = apply_hamiltonian(p, psi);

        out.push_back(make_report(
            "[H,J+] - 2J+", i,
            apply_hamiltonian(p, jp) -
                apply_raising(p, apply_raising(p, hpsi)) -
                ExtScalar(2) * jp));
        out.push_back(make_report(
            "[H,J-] + 2J-", i,
            apply_hamiltonian(p, jm) -
                apply_lowering(p, apply_lowering(p, hpsi)) +
                ExtScalar(2) * jm));
    }
    return out;
}

// Ten mixed-parity elements: monomial towers in each component plus two
// genuinely two-component, multi-term states.  Offsets start at 1 so every
// element is admissible on the half line.
inline std::vector<SpinorPoly> default_algebra_basis() {
    std::vector<SpinorPoly> basis;
    for (long k = 1; k <= 4; ++k)
        basis.emplace_back(GaussianPoly::monomial(k), GaussianPoly::zero());
    for (long k = 1; k <= 4; ++k)
        basis.emplace_back(GaussianPoly::zero(), GaussianPoly::monomial(k));
    basis.emplace_back(
        GaussianPoly(1, {ExtScalar(1), ExtScalar::zero(), ExtScalar(Rational(-1, 3))}),
        GaussianPoly::monomial(2, ExtScalar::sqrt2()));
    basis.emplace_back(
        GaussianPoly::monomial(3, ExtScalar(Rational(2), Rational(1))),
        GaussianPoly(1, {ExtScalar(Rational(1, 2)), ExtScalar(1)}));
    return basis;
}

}  // namespace wignerks
