#pragma once

#include <optional>
#include <vector>

#include "ccq/bipoly.hpp"
#include "ccq/interval.hpp"
#include "ccq/subresultant.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// A real root of a square-free polynomial, given by an isolating interval
/// (open, endpoints are not roots, sign change across it). Rational roots
/// carry the degree-1 defining polynomial x - r.
class AlgebraicNumber {
 public:
  /// Checks the sign change; Error(DegenerateInput) when it does not hold.
  AlgebraicNumber(UniPoly defining, Interval isol);
  static AlgebraicNumber rational(const Rational& r);

  const UniPoly& defining() const { return defining_; }
  const Interval& isol() const { return isol_; }
  bool is_rational() const { return defining_.degree() == 1; }
  /// Requires is_rational().
  Rational rational_value() const;
  /// Midpoint of the isolating interval as a double.
  double approx() const;

 private:
  AlgebraicNumber() = default;
  friend AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& eps);
  UniPoly defining_;
  Interval isol_;
};

/// Real roots of p in ascending order with pairwise disjoint intervals.
/// Errors: ZeroInput (p = 0), NotSquareFree.
std::vector<AlgebraicNumber> isolate(const UniPoly& p);

/// Same root, isolating interval of width < eps (eps > 0).
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& eps);

/// Number of roots of p in the open interval (lo, hi) by Sturm's theorem.
/// Error(RootAtEndpoint) if p vanishes at an endpoint.
int sturm_count(const UniPoly& p, const Interval& I);

/// flags[i] is true iff the i-th real root of p (ascending) is a root of q.
std::vector<bool> common_roots(const UniPoly& p, const UniPoly& q);
/// Variant reusing an existing isolation of p.
std::vector<bool> common_roots(const std::vector<AlgebraicNumber>& roots_of_p, const UniPoly& q);

/// Exact sign of p at a.
int sign_at(const UniPoly& p, const AlgebraicNumber& a);

/// Exact order of two real algebraic numbers (-1, 0, +1).
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Enclosure of p(a) of width < eps.
Interval enclose(const UniPoly& p, const AlgebraicNumber& a, const Rational& eps);

/// A real root of omega(alpha, x2). `box` contains it (degenerate when the
/// ordinate is known exactly); `exact` is set whenever alpha is rational.
struct FiberRoot {
  Interval box;
  int multiplicity = 1;
  std::optional<AlgebraicNumber> exact;
};

/// Real roots of omega(alpha, .) in ascending order, boxes of width < eps and
/// pairwise disjoint. omega must be monic in x2. When alpha is irrational and a
/// root of the discriminant, `hint` must hold the first subresultant of
/// (omega, d omega / d x2); the multiple root is then located at -sr10/sr1 and
/// assumed to be the only one (multiplicity 2). Error(GenericityViolation) if
/// the roots cannot be separated.
std::vector<FiberRoot> fiber_roots(const BiPoly& omega, const AlgebraicNumber& alpha,
                                   const std::optional<FirstSubresultant>& hint = std::nullopt,
                                   const Rational& eps = Rational(1, 1 << 20));

}  // namespace ccq
