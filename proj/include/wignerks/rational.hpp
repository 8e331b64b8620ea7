#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "wignerks/errors.hpp"

namespace wignerks {

// Arbitrary-precision rational scalar.  Ladder towers multiply coefficient
// denominators without bound, so fixed-width integers are not an option.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// Base-10 integer with optional sign.  cpp_int's own string constructor
// reads a leading zero as octal, which would silently corrupt decimals
// like "0.25"; parse digit by digit instead.
inline BigInt parse_decimal_int(const std::string& s) {
    std::size_t i = 0;
    bool negative = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        negative = (s[i] == '-');
        ++i;
    }
    if (i == s.size()) throw DomainError("parse_rational: malformed number '" + s + "'");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw DomainError("parse_rational: malformed number '" + s + "'");
        value = value * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

// Parses "3", "-2", "5/4", "0.25", "-1.5" into an exact rational.
// Decimal forms are exact (no round-trip through double).
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw DomainError("parse_rational: empty string");

    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        const BigInt num = parse_decimal_int(text.substr(0, slash));
        const BigInt den = parse_decimal_int(text.substr(slash + 1));
        if (den == 0) throw DomainError("parse_rational: zero denominator in '" + text + "'");
        return Rational(num) / Rational(den);
    }

    const auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_decimal_int(text));

    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t frac_len = text.size() - dot - 1;
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_len; ++i) scale *= 10;
    return Rational(parse_decimal_int(digits)) / Rational(scale);
}

}  // namespace wignerks
