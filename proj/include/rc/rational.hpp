#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rc {

// Exact rational scalar. mpq_class keeps values canonical (den > 0, reduced)
// after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

// Accepts "a" or "a/b" (optional leading '-' or U+2212). The result is
// canonicalized, so "2/4" parses as 1/2. Throws std::invalid_argument on
// anything else, including decimals and zero denominators.
Rational parse_rational(std::string_view text);

// Strict variant used by the coefficient file format: requires "num/den"
// with den >= 1 and gcd(num, den) = 1.
Rational parse_canonical_fraction(std::string_view text);

// Always "num/den", e.g. "3/1", "-1/2".
std::string to_fraction_string(const Rational &q);

// num/den in canonical form. Prefer this over Rational(num, den): the
// two-argument mpq_class constructor does not reduce, and GMP arithmetic
// and comparisons assume canonical operands.
Rational make_rational(long num, long den);

inline Rational rational_pow(const Rational &base, unsigned exponent)
{
    Rational out{1};
    for (unsigned i = 0; i < exponent; ++i) {
        out *= base;
    }
    return out;
}

} // namespace rc
