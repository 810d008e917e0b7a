#pragma once

#include <gmpxx.h>

#include <string>

namespace wordgrid {

// All bounds and concentrations are exact rationals; GMP's mpq_class does the
// heavy lifting. Values are kept canonical (reduced, positive denominator).
using Rational = mpq_class;

// mpq_class(num, den) does not reduce; always build fractions through this.
Rational frac(long num, long den);

Rational parse_rational(const std::string& text);

// "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& q);

}  // namespace wordgrid
