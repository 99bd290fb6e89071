#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ccq/rational.hpp"

namespace ccq {

/// Dense univariate polynomial over Q; coefficient index = exponent.
/// The leading stored coefficient is nonzero; the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int exponent);
  /// x - r
  static UniPoly linear_root(const Rational& r);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const Rational& lead() const { return coeffs_.back(); }
  /// Coefficient of x^i, zero beyond the degree.
  Rational coeff(int i) const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator-(UniPoly a);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

UniPoly derivative(const UniPoly& p);
UniPoly pow(const UniPoly& p, int e);

/// Euclidean division over Q. Throws Error(ZeroDenominator) for a zero divisor.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly rem(const UniPoly& a, const UniPoly& b);
/// a / b, requiring a zero remainder (Error(DegenerateInput) otherwise).
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
bool divides(const UniPoly& d, const UniPoly& a);

UniPoly monic(const UniPoly& p);

/// Integer multiple of p with coprime integer coefficients and positive leading
/// coefficient (the primitive part over Z). Zero maps to zero.
UniPoly primitive_part(const UniPoly& p);

/// Monic gcd. Throws Error(BothZero) when both inputs vanish.
UniPoly gcd(const UniPoly& p, const UniPoly& q);

/// Monic p / gcd(p, p'). Throws Error(ZeroInput) for p = 0.
UniPoly squarefree_part(const UniPoly& p);

/// Yun decomposition p = c * prod f_i^i with monic, pairwise coprime,
/// square-free f_i; only factors of positive degree are listed.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);

/// True when p has no repeated complex root (constants included).
bool is_squarefree(const UniPoly& p);

/// p(x + shift)
UniPoly taylor_shift(const UniPoly& p, const Rational& shift);
/// p(scale * x)
UniPoly scale_variable(const UniPoly& p, const Rational& scale);

/// Renders like "x1^2 - 9/5*x1 + 18/25".
std::string to_string(const UniPoly& p, std::string_view var = "x1");

}  // namespace ccq
