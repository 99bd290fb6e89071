#include "ccq/subresultant.hpp"

#include <map>
#include <utility>
#include <vector>

#include "ccq/error.hpp"

namespace ccq {

namespace {

// Polynomial in x2 with coefficients in Q[x1]; index = x2-exponent, trimmed.
using XPoly = std::vector<UniPoly>;

void trim(XPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const XPoly& p) { return static_cast<int>(p.size()) - 1; }

XPoly scaled(XPoly p, const UniPoly& c) {
  for (auto& a : p) a *= c;
  trim(p);
  return p;
}

XPoly negated(XPoly p) {
  for (auto& a : p) a = -a;
  return p;
}

XPoly divided(XPoly p, const UniPoly& c) {
  for (auto& a : p) a = exact_div(a, c);
  return p;
}

// lc(b)^(deg a - deg b + 1) * a mod b, in Q[x1][x2].
XPoly prem(XPoly r, const XPoly& b) {
  const int db = deg(b);
  const UniPoly& lb = b.back();
  int steps = deg(r) - db + 1;
  while (!r.empty() && deg(r) >= db) {
    const UniPoly c = r.back();
    const auto shift = static_cast<std::size_t>(deg(r) - db);
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j + 1 < b.size(); ++j) r[shift + j] -= c * b[j];
    r.pop_back();
    trim(r);
    --steps;
  }
  if (steps > 0) r = scaled(std::move(r), pow(lb, steps));
  return r;
}

// Subresultants S_j, j < deg Q, of P and Q with deg P >= deg Q >= 1, by the
// Lazard-Ducos remainder sequence. Indices absent from the map are zero.
std::map<int, XPoly> subresultant_prs(const XPoly& P, const XPoly& Q) {
  std::map<int, XPoly> S;
  UniPoly s = pow(Q.back(), deg(P) - deg(Q));
  XPoly A = Q;
  XPoly B = prem(P, negated(Q));
  while (true) {
    const int d = deg(A);
    const int e = deg(B);
    if (B.empty()) return S;
    S[d - 1] = B;
    const int delta = d - e;
    XPoly C = B;
    if (delta > 1) {
      C = divided(scaled(B, pow(B.back(), delta - 1)), pow(s, delta - 1));
      S[e] = C;
    }
    if (e == 0) return S;
    B = divided(prem(A, negated(B)), pow(s, delta) * A.back());
    A = std::move(C);
    s = A.back();
  }
}

// Clears denominators: returns c * p with integer coefficients, and c.
std::pair<XPoly, Integer> integral(const BiPoly& p) {
  Integer c(1);
  for (const auto& t : p.terms()) mpz_lcm(c.get_mpz_t(), c.get_mpz_t(), t.coeff.get_den_mpz_t());
  return {scaled(p.x2_coeffs(), UniPoly::constant(Rational(c))), c};
}

// S_j for deg f >= deg g, with integral inputs.
XPoly subresultant_ordered(const XPoly& f, const XPoly& g, int j) {
  const int p = deg(f), q = deg(g);
  if (j == q) {
    if (p == q) throw Error(ErrorCode::DegenerateInput, "subresultant index equals both degrees");
    return scaled(g, pow(g.back(), p - q - 1));
  }
  const auto all = subresultant_prs(f, g);
  const auto it = all.find(j);
  return it == all.end() ? XPoly{} : it->second;
}

}  // namespace

BiPoly subresultant_x2(const BiPoly& f, const BiPoly& g, int j) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::DegenerateInput, "subresultant of a zero polynomial");
  const int p = f.degree_x2(), q = g.degree_x2();
  if (j < 0 || j > std::min(p, q) || (j == p && j == q)) {
    throw Error(ErrorCode::DegenerateInput, "subresultant index out of range");
  }
  auto [fi, cf] = integral(f);
  auto [gi, cg] = integral(g);
  XPoly s;
  if (p >= q) {
    s = subresultant_ordered(fi, gi, j);
  } else {
    s = subresultant_ordered(gi, fi, j);
    if (((p - j) * (q - j)) % 2 != 0) s = negated(std::move(s));
  }
  // S_j(cf * f, cg * g) = cf^(q-j) * cg^(p-j) * S_j(f, g).
  Integer scale = 1;
  Integer tmp;
  mpz_pow_ui(tmp.get_mpz_t(), cf.get_mpz_t(), static_cast<unsigned long>(q - j));
  scale *= tmp;
  mpz_pow_ui(tmp.get_mpz_t(), cg.get_mpz_t(), static_cast<unsigned long>(p - j));
  scale *= tmp;
  s = scaled(std::move(s), UniPoly::constant(Rational(1) / Rational(scale)));
  return BiPoly::from_x2_coeffs(s);
}

UniPoly resultant_x2(const BiPoly& f, const BiPoly& g) {
  if (f.is_zero() || g.is_zero()) throw Error(ErrorCode::DegenerateInput, "resultant of a zero polynomial");
  if (f.degree_x2() <= 0) throw Error(ErrorCode::DegenerateInput, "resultant needs positive x2-degree in f");
  const auto s = subresultant_x2(f, g, 0).x2_coeffs();
  return s.empty() ? UniPoly{} : s[0];
}

FirstSubresultant first_subresultant_x2(const BiPoly& f, const BiPoly& g) {
  if (f.degree_x2() < 2 || g.degree_x2() < 1) {
    throw Error(ErrorCode::DegenerateInput, "first subresultant needs deg_x2 f >= 2 and deg_x2 g >= 1");
  }
  const auto s = subresultant_x2(f, g, 1).x2_coeffs();
  FirstSubresultant out;
  if (s.size() > 1) out.sr1 = s[1];
  if (!s.empty()) out.sr10 = s[0];
  return out;
}

}  // namespace ccq
