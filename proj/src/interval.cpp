#include "ccq/interval.hpp"

#include <algorithm>

#include "ccq/error.hpp"

namespace ccq {

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo == a.hi) {
    if (sgn(a.lo) >= 0) return {a.lo * b.lo, a.lo * b.hi};
    return {a.lo * b.hi, a.lo * b.lo};
  }
  const Rational p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
  return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw Error(ErrorCode::ZeroDenominator, "interval division by an interval containing 0");
  return a * Interval{1 / b.hi, 1 / b.lo};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

Interval magnitude(const Interval& a) {
  if (a.contains_zero()) return {Rational(0), std::max(Rational(-a.lo), a.hi)};
  if (sgn(a.lo) > 0) return a;
  return -a;
}

Interval eval(const UniPoly& p, const Interval& x) {
  if (p.is_zero()) return Interval::point(0);
  if (x.lo == x.hi) return Interval::point(p(x.lo));
  const auto c = p.coeffs();
  Interval acc = Interval::point(c.back());
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * x + Interval::point(*it);
  return acc;
}

Interval eval(std::span<const Interval> coeffs, const Interval& x) {
  if (coeffs.empty()) return Interval::point(0);
  Interval acc = coeffs.back();
  for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string to_string(const Interval& i) { return "[" + i.lo.get_str() + ", " + i.hi.get_str() + "]"; }

}  // namespace ccq
