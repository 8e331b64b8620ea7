#pragma once

#include <optional>
#include <string>

#include "wignerks/errors.hpp"
#include "wignerks/spinor_poly.hpp"

namespace wignerks {

// Deformation data for the algebra: the parameter c is tied to ell by
// c = 2(ell+1), and ell+1 > 0 keeps the ground state normalizable.  ell may
// be any rational; only state construction needs it to be an integer.
struct WignerParams {
    Rational ell;
    Rational c;

    explicit WignerParams(Rational ell_) : ell(std::move(ell_)), c(2 * (ell + 1)) {
        if (ell + 1 <= 0)
            throw DomainError("WignerParams: require ell + 1 > 0");
    }
};

enum class Sign { plus, minus };

struct LadderOp {
    Sign sign;
    WignerParams params;
};

// First-order ladder operator on a two-component state:
//
//   a(+-) = (1/sqrt(2)) { (+-)d/dx (+-) ((ell+1)/x) Sigma3 - x } Sigma1.
//
// Both variable signs take the operator's sign.  After the Sigma1 swap the
// upper component sees +((ell+1)/x) under Sigma3 and the lower sees the
// opposite sign.
inline SpinorPoly apply_ladder(const LadderOp& op, const SpinorPoly& psi) {
    const Rational s = (op.sign == Sign::plus) ? Rational(1) : Rational(-1);
    const Rational k = op.params.ell + 1;
    const ExtScalar r = ExtScalar::inv_sqrt2();
    const SpinorPoly swapped = apply_sigma1(psi);

    const auto act = [&](const GaussianPoly& g, const Rational& sigma3) {
        GaussianPoly out = ExtScalar(s) * gp_differentiate(g);
        out = out + ExtScalar(s * k * sigma3) * gp_div_x(g);
        out = out - gp_mul_x(g);
        return r * out;
    };
    return {act(swapped.upper, Rational(1)), act(swapped.lower, Rational(-1))};
}

inline SpinorPoly apply_raising(const WignerParams& p, const SpinorPoly& psi) {
    return apply_ladder({Sign::plus, p}, psi);
}
inline SpinorPoly apply_lowering(const WignerParams& p, const SpinorPoly& psi) {
    return apply_ladder({Sign::minus, p}, psi);
}

// H = (1/2)(a+ a- + a- a+), by composition of the ladder operators.
inline SpinorPoly apply_hamiltonian(const WignerParams& p, const SpinorPoly& psi) {
    const SpinorPoly up_down = apply_raising(p, apply_lowering(p, psi));
    const SpinorPoly down_up = apply_lowering(p, apply_raising(p, psi));
    return ExtScalar(Rational(1, 2)) * (up_down + down_up);
}

// The same Hamiltonian in its explicit diagonal form
// diag(H-(ell), H-(ell+1)) with H-(k) = (1/2){-d^2/dx^2 + x^2 + k(k+1)/x^2}.
// Agreement with the composition route is a tested property, not assumed.
inline SpinorPoly apply_hamiltonian_explicit(const WignerParams& p, const SpinorPoly& psi) {
    const auto sector = [](const Rational& k, const GaussianPoly& g) {
        GaussianPoly out = ExtScalar(-1) * gp_differentiate(gp_differentiate(g));
        out = out + gp_mul_x(gp_mul_x(g));
        out = out + ExtScalar(k * (k + 1)) * gp_div_x(gp_div_x(g));
        return ExtScalar(Rational(1, 2)) * out;
    };
    return {sector(p.ell, psi.upper), sector(p.ell + 1, psi.lower)};
}

// E_n = ell + 3/2 + n.
inline Rational wigner_energy(const Rational& ell, long n) {
    if (ell + 1 <= 0) throw DomainError("wigner_energy: require ell + 1 > 0");
    if (n < 0) throw DomainError("wigner_energy: require n >= 0");
    return ell + Rational(3, 2) + n;
}

// (a+)^n applied to the ground state Psi_0 = (x^(ell+1) e^(-x^2/2), 0),
// unnormalized.  The exact representation stores integer powers of x, so
// state construction demands integer ell >= 0; the operator algebra itself
// has no such restriction.
inline SpinorPoly build_state(const WignerParams& p, long n) {
    if (n < 0) throw DomainError("build_state: require n >= 0");
    if (!is_integer(p.ell) || p.ell < 0)
        throw DomainError("build_state: ground state x^(ell+1) needs integer ell >= 0");
    const long ell = static_cast<long>(numerator(p.ell).template convert_to<long long>());
    SpinorPoly psi{GaussianPoly::monomial(ell + 1), GaussianPoly::zero()};
    for (long i = 0; i < n; ++i) psi = apply_raising(p, psi);
    return psi;
}

// Exact ratio of two moment values, defined only when num is an exact
// rational multiple of den.  Componentwise: the first nonzero component of
// den fixes the candidate ratio, the rest must agree.
inline std::optional<Rational> moment_ratio(const MomentScalar& num, const MomentScalar& den) {
    const Rational* nc[] = {&num.q1, &num.q2, &num.qpi, &num.q2pi};
    const Rational* dc[] = {&den.q1, &den.q2, &den.qpi, &den.q2pi};
    std::optional<Rational> ratio;
    for (int i = 0; i < 4; ++i) {
        if (*dc[i] == 0) {
            if (*nc[i] != 0) return std::nullopt;
            continue;
        }
        const Rational r = *nc[i] / *dc[i];
        if (ratio && *ratio != r) return std::nullopt;
        ratio = r;
    }
    return ratio;
}

// <psi, H psi> / <psi, psi> as an exact rational; the sqrt(pi) content of
// the two inner products cancels in the quotient.  Empty when the state is
// not an eigenvector-like direction (numerator not proportional to the
// denominator).
inline std::optional<Rational> rayleigh_quotient(const WignerParams& p, const SpinorPoly& psi) {
    if (psi.is_zero()) throw DomainError("rayleigh_quotient: zero state");
    const MomentScalar num = sp_inner(psi, apply_hamiltonian(p, psi));
    const MomentScalar den = sp_inner(psi, psi);
    return moment_ratio(num, den);
}

}  // namespace wignerks
