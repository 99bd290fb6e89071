#pragma once

#include <string>
#include <vector>

#include "ccq/bipoly.hpp"
#include "ccq/interval.hpp"
#include "ccq/realroot.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// Finite point set {(b, theta_2(b)/lambda'(b), ..., theta_n(b)/lambda'(b)) : lambda(b) = 0, b real}.
struct ZeroDimParam {
  int n = 2;
  UniPoly lambda;
  std::vector<UniPoly> thetas;  // theta_2 .. theta_n

  friend bool operator==(const ZeroDimParam&, const ZeroDimParam&) = default;
};

/// Curve: closure of {(a, b, rho_3/omega_y, ..., rho_n/omega_y)(a, b) : omega(a, b) = 0, omega_y(a, b) != 0}.
struct OneDimParam {
  int n = 2;
  BiPoly omega;
  std::vector<BiPoly> rhos;  // rho_3 .. rho_n

  friend bool operator==(const OneDimParam&, const OneDimParam&) = default;
};

struct Issue {
  std::string code;
  std::string detail;
};

struct ValidationReport {
  std::vector<Issue> violations;
  std::vector<Issue> warnings;
  bool ok() const { return violations.empty(); }
};

/// Violation codes: DimensionMismatch, ZeroPolynomial, NotMonic, NotSquareFree, DegreeViolation.
/// Warning codes: RationalCoefficients.
ValidationReport validate_zero_dim(const ZeroDimParam& P);

/// Violation codes: DimensionMismatch, NoX2Dependence, NotMonicInX2, NotSquareFree, RhoDegreeViolation.
/// Warning codes: RationalCoefficients, NotMonicInX1.
ValidationReport validate_one_dim(const OneDimParam& C);

/// Query points with every coordinate enclosed to width < eps, in x1 order.
std::vector<std::vector<Interval>> decode_points(const ZeroDimParam& P, const Rational& eps);

/// A point of the plane projection; rational coordinates use AlgebraicNumber::rational.
struct PlanePoint {
  AlgebraicNumber x1;
  AlgebraicNumber x2;
};

/// Enclosures of width < eps of x3..xn = rho_i / omega_y at y.
/// Error(CriticalPoint) when omega_y vanishes at y (y assumed on the curve).
std::vector<Interval> lift_plane_point(const OneDimParam& C, const PlanePoint& y, const Rational& eps);

/// Horner enclosure of p over the box x * y.
Interval eval(const BiPoly& p, const Interval& x, const Interval& y);

}  // namespace ccq
