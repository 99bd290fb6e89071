#include "ccq/unipoly.hpp"

#include <algorithm>

#include "ccq/error.hpp"

namespace ccq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int exponent) {
  std::vector<Rational> v(static_cast<std::size_t>(exponent) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& r) { return UniPoly({-r, Rational(1)}); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
  *this = *this * o;
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

UniPoly operator-(UniPoly a) {
  for (auto& c : a.coeffs_) c = -c;
  return a;
}

UniPoly derivative(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> out(static_cast<std::size_t>(p.degree()));
  for (int i = 1; i <= p.degree(); ++i) out[static_cast<std::size_t>(i - 1)] = p.coeffs()[static_cast<std::size_t>(i)] * i;
  return UniPoly(std::move(out));
}

UniPoly pow(const UniPoly& p, int e) {
  UniPoly result = UniPoly::constant(1);
  UniPoly base = p;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroDenominator, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
  const Rational inv_lead = 1 / b.lead();
  const auto db = static_cast<std::size_t>(b.degree());
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const auto ku = static_cast<std::size_t>(k);
    const Rational c = r[ku + db] * inv_lead;
    q[ku] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[ku + j] -= c * b.coeffs()[j];
  }
  r.resize(db);
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly rem(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(ErrorCode::DegenerateInput, "inexact polynomial division");
  return q;
}

bool divides(const UniPoly& d, const UniPoly& a) { return rem(a, d).is_zero(); }

UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  return p * (1 / p.lead());
}

UniPoly primitive_part(const UniPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm(1);
  for (const auto& c : p.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> ints;
  ints.reserve(p.coeffs().size());
  Integer content(0);
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(Integer(v / content));
  return UniPoly(std::move(out));
}

namespace {

// prem(a, b) = lc(b)^(deg a - deg b + 1) * a mod b, computed without fractions
// when a and b have integer coefficients.
UniPoly pseudo_rem(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> r(a.coeffs().begin(), a.coeffs().end());
  const auto db = static_cast<std::size_t>(b.degree());
  const Rational& lb = b.lead();
  int steps = a.degree() - b.degree() + 1;
  while (r.size() > db && !r.empty()) {
    const Rational c = r.back();
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= c * b.coeffs()[j];
    r.pop_back();
    while (!r.empty() && r.back() == 0) r.pop_back();
    --steps;
  }
  UniPoly out(std::move(r));
  for (; steps > 0; --steps) out *= lb;
  return out;
}

}  // namespace

UniPoly gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0)");
  if (p.is_zero()) return monic(q);
  if (q.is_zero()) return monic(p);
  // Primitive PRS over Z keeps coefficient growth in check.
  UniPoly a = primitive_part(p);
  UniPoly b = primitive_part(q);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    UniPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return monic(a);
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free part of the zero polynomial");
  if (p.degree() == 0) return UniPoly::constant(1);
  return monic(exact_div(p, gcd(p, derivative(p))));
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroInput, "square-free decomposition of the zero polynomial");
  std::vector<std::pair<UniPoly, int>> out;
  if (p.degree() == 0) return out;
  const UniPoly dp = derivative(p);
  UniPoly a = gcd(p, dp);
  UniPoly b = exact_div(p, a);
  UniPoly c = exact_div(dp, a);
  UniPoly d = c - derivative(b);
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly f = gcd(b, d);
    if (f.degree() > 0) out.emplace_back(monic(f), i);
    b = exact_div(b, f);
    c = exact_div(d, f);
    d = c - derivative(b);
  }
  return out;
}

bool is_squarefree(const UniPoly& p) {
  if (p.degree() <= 0) return true;
  return gcd(p, derivative(p)).degree() == 0;
}

UniPoly taylor_shift(const UniPoly& p, const Rational& shift) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  const int n = p.degree();
  if (shift == 0 || n <= 0) return p;
  for (int i = 0; i < n; ++i) {
    for (int j = n - 1; j >= i; --j) {
      c[static_cast<std::size_t>(j)] += shift * c[static_cast<std::size_t>(j) + 1];
    }
  }
  return UniPoly(std::move(c));
}

UniPoly scale_variable(const UniPoly& p, const Rational& scale) {
  std::vector<Rational> c(p.coeffs().begin(), p.coeffs().end());
  Rational f(1);
  for (auto& x : c) {
    x *= f;
    f *= scale;
  }
  return UniPoly(std::move(c));
}

std::string to_string(const UniPoly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const bool neg = sgn(c) < 0;
    const Rational a = neg ? Rational(-c) : c;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0) {
      out += a.get_str();
      continue;
    }
    if (a != 1) out += a.get_str() + "*";
    out += var;
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace ccq
