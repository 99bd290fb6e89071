#pragma once

#include <span>
#include <string>
#include <vector>

#include "ccq/rational.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

enum class Var { x1, x2 };

struct Term {
  int e1 = 0;  // exponent of x1
  int e2 = 0;  // exponent of x2
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial in (x1, x2). Terms are sorted by (e2, e1), exponent pairs
/// are unique and no stored coefficient is zero.
class BiPoly {
 public:
  BiPoly() = default;

  /// Sorts, merges duplicate exponent pairs and drops zeros.
  static BiPoly from_terms(std::vector<Term> terms);
  /// sum_k coeffs[k](x1) * x2^k
  static BiPoly from_x2_coeffs(std::span<const UniPoly> coeffs);
  static BiPoly constant(const Rational& c);
  static BiPoly variable(Var v);
  /// Embeds a polynomial in x1.
  static BiPoly from_x1(const UniPoly& p);

  std::span<const Term> terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree_x1() const;
  int degree_x2() const;
  int total_degree() const;

  /// Dense x2-coefficients: result[k] is the coefficient of x2^k as a polynomial in x1.
  std::vector<UniPoly> x2_coeffs() const;
  /// Coefficient of x2^(degree_x2()).
  UniPoly leading_x2_coeff() const;

  Rational operator()(const Rational& x1, const Rational& x2) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const Rational& c, BiPoly a) { return a *= c; }
  friend BiPoly operator-(BiPoly a) { return a *= Rational(-1); }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  std::vector<Term> terms_;
};

BiPoly partial(const BiPoly& p, Var which);
BiPoly pow(const BiPoly& p, int e);

/// f(a, x2) as a polynomial in x2.
UniPoly eval_fiber(const BiPoly& f, const Rational& a);

/// With A = sum_k a_k(x1) x2^k and d = degree: sum_k a_k * num^k * den^(d-k).
/// `degree` defaults to deg_x2(A) and must not be smaller than it.
/// Throws Error(ZeroDenominator) when den = 0.
UniPoly homogenized_substitute(const BiPoly& A, const UniPoly& num, const UniPoly& den);
UniPoly homogenized_substitute(const BiPoly& A, const UniPoly& num, const UniPoly& den, int degree);

/// Renders with variables x1, x2, e.g. "x2^2 - x1^3 - x1^2".
std::string to_string(const BiPoly& p);

}  // namespace ccq
