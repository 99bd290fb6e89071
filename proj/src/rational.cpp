#include "ccq/rational.hpp"

#include <cctype>

#include "ccq/error.hpp"

namespace ccq {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::DegenerateInput: return "DegenerateInput";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::NotSquareFree: return "NotSquareFree";
    case ErrorCode::RootAtEndpoint: return "RootAtEndpoint";
    case ErrorCode::GenericityViolation: return "GenericityViolation";
    case ErrorCode::CriticalPoint: return "CriticalPoint";
    case ErrorCode::DegenerateCurve: return "DegenerateCurve";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorCode::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  const Integer d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ZeroDenominator, "zero denominator in '" + std::string(text) + "'");
  Rational r(Integer(n), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Integer floor(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Rational simplest_in(const Rational& lo, const Rational& hi) {
  if (lo <= 0 && hi >= 0) return Rational(0);
  if (hi < 0) return -simplest_in(-hi, -lo);
  // 0 < lo <= hi: continued-fraction descent of the Stern-Brocot tree.
  const Integer fl = floor(lo);
  if (fl == lo) return Rational(fl);
  if (fl + 1 <= hi) return Rational(fl + 1);
  const Rational frac_lo = lo - fl;
  const Rational frac_hi = hi - fl;
  const Rational inner = simplest_in(1 / frac_hi, 1 / frac_lo);
  return Rational(fl) + 1 / inner;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace ccq
