#pragma once

#include <span>
#include <string>

#include "ccq/rational.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// Closed interval [lo, hi] with exact rational endpoints. Isolating intervals
/// have lo < hi; arithmetic enclosures may be degenerate points.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& x) { return {x, x}; }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
  /// Sign when the enclosure excludes zero, 0 otherwise.
  int certain_sign() const { return sgn(lo) > 0 ? 1 : (sgn(hi) < 0 ? -1 : 0); }
  bool inside(const Interval& o) const { return o.lo <= lo && hi <= o.hi; }
  bool disjoint(const Interval& o) const { return hi < o.lo || o.hi < lo; }

  friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Requires b to exclude zero (Error(ZeroDenominator) otherwise).
Interval operator/(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);
Interval magnitude(const Interval& a);  // {|x| : x in a}

/// Horner enclosure of p over x.
Interval eval(const UniPoly& p, const Interval& x);
/// Horner enclosure of sum_k coeffs[k] * x^k with interval coefficients.
Interval eval(std::span<const Interval> coeffs, const Interval& x);

std::string to_string(const Interval& i);

}  // namespace ccq
