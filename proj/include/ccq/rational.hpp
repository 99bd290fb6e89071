#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace ccq {

using Integer = mpz_class;

/// Normalized fraction; gmpxx keeps gcd(num, den) = 1 and den > 0 after every
/// arithmetic operation, and 0 is stored as 0/1.
using Rational = mpq_class;

/// Parses "-7", "3/5" or "-12/8" (result is canonicalized). Throws Error(ParseError).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline int sign(const Rational& r) { return sgn(r); }

Integer floor(const Rational& r);
Integer ceil(const Rational& r);

/// Rational with the smallest denominator (then smallest |numerator|) in the
/// closed interval [lo, hi]. Requires lo <= hi.
Rational simplest_in(const Rational& lo, const Rational& hi);

double to_double(const Rational& r);

}  // namespace ccq
