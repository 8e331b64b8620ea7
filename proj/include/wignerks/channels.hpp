#pragma once

#include "wignerks/errors.hpp"
#include "wignerks/rational.hpp"

namespace wignerks {

// Angular channel labels.  The two-component angular eigenfunctions obey
// (sigma.L + 1) yeigenvalue relations +(ell+1) on y+ and -(ell+1) on y-,
// so sigma.L itself acts as +ell on y+ and -(ell+2) on y-.
enum class SpinChannel { y_plus, y_minus };
enum class Sector { bosonic, fermionic };

struct ChannelSpec {
    long ell = 0;
    SpinChannel spin = SpinChannel::y_plus;
    Sector sector = Sector::bosonic;
};

inline Rational sigma_dot_l_eigenvalue(const ChannelSpec& ch) {
    if (ch.ell < 0) throw DomainError("sigma_dot_l_eigenvalue: require ell >= 0");
    return ch.spin == SpinChannel::y_plus ? Rational(ch.ell) : Rational(-(ch.ell + 2));
}

// q = sigma.L (sigma.L + 1): ell(ell+1) on y+, (ell+1)(ell+2) on y-.
// This equals L^2 on the channel, which is what the radial reduction needs.
inline Rational channel_q(const ChannelSpec& ch) {
    const Rational sl = sigma_dot_l_eigenvalue(ch);
    return sl * (sl + 1);
}

// Coefficient of 1/(2 s^2) in the reduced radial operator after u = s^(3/2) R:
// 4 q + 3/4.
inline Rational centrifugal_coefficient(const ChannelSpec& ch) {
    return 4 * channel_q(ch) + Rational(3, 4);
}

// The same coefficient as it appears factored in the diagonal block form,
// (2k + 1/2)(2k + 3/2) with k = ell on y+ and k = ell + 1 on y-.  Equality
// with centrifugal_coefficient is a checked identity, not an assumption.
inline Rational block_coefficient_reference(const Rational& k) {
    return (2 * k + Rational(1, 2)) * (2 * k + Rational(3, 2));
}

inline Rational block_parameter(const ChannelSpec& ch) {
    return ch.spin == SpinChannel::y_plus ? Rational(ch.ell) : Rational(ch.ell + 1);
}

}  // namespace wignerks
