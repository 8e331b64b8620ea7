#pragma once

#include "wignerks/errors.hpp"

namespace wignerks {

// Generalized Laguerre polynomial L_m^alpha(x) by the upward three-term
// recurrence
//   L_0 = 1,  L_1 = 1 + alpha - x,
//   (k+1) L_{k+1} = (2k + 1 + alpha - x) L_k - (k + alpha) L_{k-1},
// which is stable for the alpha > -1, moderate m needed here and avoids the
// factorial overflow of the series form.
inline double laguerre(double alpha, long m, double x) {
    if (!(alpha > -1.0)) throw DomainError("laguerre: require alpha > -1");
    if (m < 0) throw DomainError("laguerre: require m >= 0");
    if (m == 0) return 1.0;
    double prev = 1.0;
    double cur = 1.0 + alpha - x;
    for (long k = 1; k < m; ++k) {
        const double next = ((2 * k + 1 + alpha - x) * cur - (k + alpha) * prev) / (k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace wignerks
