#include "ccq/bipoly.hpp"

#include <algorithm>
#include <map>

#include "ccq/error.hpp"

namespace ccq {

namespace {

bool term_less(const Term& a, const Term& b) {
  return a.e2 != b.e2 ? a.e2 < b.e2 : a.e1 < b.e1;
}

}  // namespace

BiPoly BiPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  BiPoly out;
  for (auto& t : terms) {
    if (t.e1 < 0 || t.e2 < 0) throw Error(ErrorCode::InvalidInput, "negative exponent");
    if (!out.terms_.empty() && out.terms_.back().e1 == t.e1 && out.terms_.back().e2 == t.e2) {
      out.terms_.back().coeff += t.coeff;
      if (out.terms_.back().coeff == 0) out.terms_.pop_back();
    } else if (t.coeff != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

BiPoly BiPoly::from_x2_coeffs(std::span<const UniPoly> coeffs) {
  BiPoly out;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const auto& c = coeffs[k];
    for (int i = 0; i <= c.degree(); ++i) {
      const Rational& v = c.coeffs()[static_cast<std::size_t>(i)];
      if (v != 0) out.terms_.push_back({i, static_cast<int>(k), v});
    }
  }
  return out;
}

BiPoly BiPoly::constant(const Rational& c) { return from_terms({{0, 0, c}}); }

BiPoly BiPoly::variable(Var v) {
  return v == Var::x1 ? from_terms({{1, 0, Rational(1)}}) : from_terms({{0, 1, Rational(1)}});
}

BiPoly BiPoly::from_x1(const UniPoly& p) {
  const UniPoly one[] = {p};
  return from_x2_coeffs(one);
}

int BiPoly::degree_x1() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.e1);
  return d;
}

int BiPoly::degree_x2() const { return terms_.empty() ? -1 : terms_.back().e2; }

int BiPoly::total_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.e1 + t.e2);
  return d;
}

std::vector<UniPoly> BiPoly::x2_coeffs() const {
  std::vector<std::vector<Rational>> dense(static_cast<std::size_t>(degree_x2() + 1));
  for (const auto& t : terms_) {
    auto& row = dense[static_cast<std::size_t>(t.e2)];
    if (row.size() <= static_cast<std::size_t>(t.e1)) row.resize(static_cast<std::size_t>(t.e1) + 1);
    row[static_cast<std::size_t>(t.e1)] = t.coeff;
  }
  std::vector<UniPoly> out;
  out.reserve(dense.size());
  for (auto& row : dense) out.emplace_back(std::move(row));
  return out;
}

UniPoly BiPoly::leading_x2_coeff() const {
  if (terms_.empty()) return {};
  return x2_coeffs().back();
}

Rational BiPoly::operator()(const Rational& x1, const Rational& x2) const {
  return eval_fiber(*this, x1)(x2);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  *this = from_terms(std::move(all));
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) { return *this += -o; }

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  std::map<std::pair<int, int>, Rational> acc;
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) acc[{s.e2 + t.e2, s.e1 + t.e1}] += s.coeff * t.coeff;
  }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [key, c] : acc) out.push_back({key.second, key.first, c});
  return BiPoly::from_terms(std::move(out));
}

BiPoly partial(const BiPoly& p, Var which) {
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    const int e = which == Var::x1 ? t.e1 : t.e2;
    if (e == 0) continue;
    Term d = t;
    d.coeff *= e;
    (which == Var::x1 ? d.e1 : d.e2) -= 1;
    out.push_back(std::move(d));
  }
  return BiPoly::from_terms(std::move(out));
}

BiPoly pow(const BiPoly& p, int e) {
  BiPoly result = BiPoly::constant(1);
  for (int i = 0; i < e; ++i) result = result * p;
  return result;
}

UniPoly eval_fiber(const BiPoly& f, const Rational& a) {
  const auto coeffs = f.x2_coeffs();
  std::vector<Rational> out;
  out.reserve(coeffs.size());
  for (const auto& c : coeffs) out.push_back(c(a));
  return UniPoly(std::move(out));
}

UniPoly homogenized_substitute(const BiPoly& A, const UniPoly& num, const UniPoly& den) {
  return homogenized_substitute(A, num, den, std::max(A.degree_x2(), 0));
}

UniPoly homogenized_substitute(const BiPoly& A, const UniPoly& num, const UniPoly& den, int degree) {
  if (den.is_zero()) throw Error(ErrorCode::ZeroDenominator, "homogenized substitution with zero denominator");
  if (degree < A.degree_x2()) throw Error(ErrorCode::DegenerateInput, "homogenization degree below deg_x2");
  const auto coeffs = A.x2_coeffs();
  // Horner in the homogeneous pair (num : den): acc_k = acc_{k+1} * num + a_k * den^(dA-k).
  UniPoly acc;
  UniPoly den_pow = UniPoly::constant(1);
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    acc = acc * num + coeffs[static_cast<std::size_t>(k)] * den_pow;
    den_pow *= den;
  }
  const int extra = degree - std::max(A.degree_x2(), 0);
  return acc * pow(den, extra);
}

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  // Descending total degree, then descending x2 exponent.
  std::vector<Term> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    const int da = a.e1 + a.e2, db = b.e1 + b.e2;
    if (da != db) return da > db;
    return a.e2 > b.e2;
  });
  std::string out;
  for (const auto& t : terms) {
    const bool neg = sgn(t.coeff) < 0;
    const Rational a = neg ? Rational(-t.coeff) : t.coeff;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mono;
    auto add_var = [&mono](const char* name, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add_var("x1", t.e1);
    add_var("x2", t.e2);
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace ccq
