#include "ccq/params.hpp"

#include "ccq/error.hpp"
#include "ccq/subresultant.hpp"

namespace ccq {

namespace {

bool integral(const UniPoly& p) {
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) return false;
  }
  return true;
}

bool integral(const BiPoly& p) {
  for (const auto& t : p.terms()) {
    if (t.coeff.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

ValidationReport validate_zero_dim(const ZeroDimParam& P) {
  ValidationReport r;
  if (P.n < 2 || static_cast<int>(P.thetas.size()) != P.n - 1) {
    r.violations.push_back({"DimensionMismatch", "expected " + std::to_string(P.n - 1) + " theta polynomials, got " +
                                                     std::to_string(P.thetas.size())});
  }
  if (P.lambda.is_zero()) {
    r.violations.push_back({"ZeroPolynomial", "lambda is the zero polynomial"});
    return r;
  }
  if (P.lambda.lead() != 1) r.violations.push_back({"NotMonic", "lambda is not monic"});
  if (!is_squarefree(P.lambda)) r.violations.push_back({"NotSquareFree", "lambda has a repeated root"});
  bool rational = !integral(P.lambda);
  for (std::size_t i = 0; i < P.thetas.size(); ++i) {
    if (P.thetas[i].degree() >= P.lambda.degree()) {
      r.violations.push_back({"DegreeViolation", "deg theta_" + std::to_string(i + 2) + " >= deg lambda"});
    }
    rational = rational || !integral(P.thetas[i]);
  }
  if (rational) r.warnings.push_back({"RationalCoefficients", "non-integer coefficients in the query parametrization"});
  return r;
}

ValidationReport validate_one_dim(const OneDimParam& C) {
  ValidationReport r;
  if (C.n < 2 || static_cast<int>(C.rhos.size()) != C.n - 2) {
    r.violations.push_back({"DimensionMismatch", "expected " + std::to_string(std::max(C.n - 2, 0)) +
                                                     " rho polynomials, got " + std::to_string(C.rhos.size())});
  }
  const int d = C.omega.degree_x2();
  if (d < 1) {
    r.violations.push_back({"NoX2Dependence", "omega has no positive x2-degree"});
    return r;
  }
  if (C.omega.leading_x2_coeff() != UniPoly::constant(1)) {
    r.violations.push_back({"NotMonicInX2", "leading x2-coefficient of omega is not 1"});
  } else if (d >= 2 && resultant_x2(C.omega, partial(C.omega, Var::x2)).is_zero()) {
    r.violations.push_back({"NotSquareFree", "omega has a repeated factor (discriminant vanishes)"});
  }
  bool rational = !integral(C.omega);
  for (std::size_t i = 0; i < C.rhos.size(); ++i) {
    if (C.rhos[i].degree_x2() >= d) {
      r.violations.push_back({"RhoDegreeViolation", "deg_x2 rho_" + std::to_string(i + 3) + " >= deg_x2 omega"});
    }
    rational = rational || !integral(C.rhos[i]);
  }
  if (rational) r.warnings.push_back({"RationalCoefficients", "non-integer coefficients in the curve parametrization"});
  // Leading coefficient in x1: terms of top x1-degree must reduce to a constant.
  const int d1 = C.omega.degree_x1();
  int top_terms = 0;
  for (const auto& t : C.omega.terms()) top_terms += t.e1 == d1 ? 1 : 0;
  bool monic_x1 = top_terms == 1;
  for (const auto& t : C.omega.terms()) {
    if (t.e1 == d1) monic_x1 = monic_x1 && t.e2 == 0;
  }
  if (!monic_x1) r.warnings.push_back({"NotMonicInX1", "leading x1-coefficient of omega is not constant"});
  return r;
}

std::vector<std::vector<Interval>> decode_points(const ZeroDimParam& P, const Rational& eps) {
  std::vector<std::vector<Interval>> out;
  if (P.lambda.degree() < 1) return out;
  const UniPoly dl = derivative(P.lambda);
  for (const auto& b : isolate(P.lambda)) {
    AlgebraicNumber r = refine(b, eps);
    while (true) {
      std::vector<Interval> pt = {r.is_rational() ? Interval::point(r.rational_value()) : r.isol()};
      const Interval den = r.is_rational() ? Interval::point(dl(r.rational_value())) : eval(dl, r.isol());
      bool narrow = !den.contains_zero();
      for (std::size_t i = 0; narrow && i < P.thetas.size(); ++i) {
        const Interval num = r.is_rational() ? Interval::point(P.thetas[i](r.rational_value())) : eval(P.thetas[i], r.isol());
        pt.push_back(num / den);
        narrow = pt.back().width() < eps;
      }
      if (narrow) {
        out.push_back(std::move(pt));
        break;
      }
      r = refine(r, r.isol().width() / 16);
    }
  }
  return out;
}

Interval eval(const BiPoly& p, const Interval& x, const Interval& y) {
  std::vector<Interval> c;
  for (const auto& a : p.x2_coeffs()) c.push_back(eval(a, x));
  return eval(c, y);
}

std::vector<Interval> lift_plane_point(const OneDimParam& C, const PlanePoint& y, const Rational& eps) {
  const BiPoly dy = partial(C.omega, Var::x2);
  if (y.x1.is_rational() && y.x2.is_rational()) {
    const Rational a = y.x1.rational_value(), b = y.x2.rational_value();
    const Rational den = dy(a, b);
    if (den == 0) throw Error(ErrorCode::CriticalPoint, "omega_y vanishes at the lifted point");
    std::vector<Interval> out;
    for (const auto& rho : C.rhos) out.push_back(Interval::point(rho(a, b) / den));
    return out;
  }
  if (C.omega.degree_x2() >= 2) {
    const UniPoly R = resultant_x2(C.omega, dy);
    if (sign_at(R, y.x1) == 0) {
      // Critical fiber: the point is critical iff it is the fiber's multiple root.
      const auto roots = fiber_roots(C.omega, y.x1, first_subresultant_x2(C.omega, dy));
      AlgebraicNumber b = y.x2;
      while (true) {
        int hits = 0, hit_mult = 0;
        for (const auto& r : roots) {
          if (!b.isol().disjoint(r.box)) {
            ++hits;
            hit_mult = r.multiplicity;
          }
        }
        if (hits == 0) break;  // not on the curve; the lift is still well defined below if omega_y != 0
        if (hits == 1) {
          if (hit_mult > 1) throw Error(ErrorCode::CriticalPoint, "omega_y vanishes at the lifted point");
          break;
        }
        b = refine(b, b.isol().width() / 4);
      }
    }
  }
  AlgebraicNumber a = y.x1, b = y.x2;
  for (int step = 0;; ++step) {
    if (step > 2000) throw Error(ErrorCode::CriticalPoint, "omega_y does not separate from 0 at the lifted point");
    const Interval ia = a.is_rational() ? Interval::point(a.rational_value()) : a.isol();
    const Interval ib = b.is_rational() ? Interval::point(b.rational_value()) : b.isol();
    const Interval den = eval(dy, ia, ib);
    bool narrow = !den.contains_zero();
    std::vector<Interval> out;
    for (std::size_t i = 0; narrow && i < C.rhos.size(); ++i) {
      out.push_back(eval(C.rhos[i], ia, ib) / den);
      narrow = out.back().width() < eps;
    }
    if (narrow) return out;
    a = refine(a, a.isol().width() / 4);
    b = refine(b, b.isol().width() / 4);
  }
}

}  // namespace ccq
