#include <random>

#include "doctest.h"

#include "ccq/error.hpp"
#include "ccq/parse.hpp"
#include "ccq/realroot.hpp"
#include "ccq/subresultant.hpp"
#include "oracles/bigfloat.hpp"
#include "oracles/random_poly.hpp"

using namespace ccq;

namespace {

UniPoly U(const char* s) { return parse_unipoly(s); }
BiPoly B(const char* s) { return parse_bipoly(s); }

bool sign_change(const AlgebraicNumber& a) {
  return sgn(a.defining()(a.isol().lo)) * sgn(a.defining()(a.isol().hi)) < 0;
}

UniPoly product_of_roots(const std::vector<int>& roots) {
  UniPoly p = UniPoly::constant(1);
  for (int r : roots) p *= UniPoly::linear_root(r);
  return p;
}

}  // namespace

TEST_CASE("isolate: contract examples") {
  const auto r = isolate(U("x1^2 - 2"));
  REQUIRE(r.size() == 2);
  for (const auto& a : r) CHECK(sign_change(a));
  CHECK(r[0].isol().hi < r[1].isol().lo);

  const auto q = isolate(U("x1^2 + x1"));
  REQUIRE(q.size() == 2);
  CHECK(q[0].is_rational());
  CHECK(q[0].rational_value() == -1);
  CHECK(q[1].rational_value() == 0);

  CHECK(isolate(U("5")).empty());
  CHECK_THROWS_AS(isolate(UniPoly{}), Error);
  CHECK_THROWS_AS(isolate(U("(x1 - 1)^2")), Error);
}

TEST_CASE("isolate: rational roots mixed with irrational ones") {
  const auto r = isolate(U("(3*x1 - 2)*(x1^2 - 3)*(7*x1 + 5)*x1"));
  REQUIRE(r.size() == 5);
  CHECK(r[0].defining() == U("x1^2 - 3"));
  CHECK(r[1].rational_value() == Rational(-5, 7));
  CHECK(r[2].rational_value() == 0);
  CHECK(r[3].rational_value() == Rational(2, 3));
  CHECK_FALSE(r[4].is_rational());
  for (std::size_t i = 0; i + 1 < r.size(); ++i) CHECK(r[i].isol().hi < r[i + 1].isol().lo);
}

TEST_CASE("isolate: root count equals Sturm count over the root bound") {
  std::mt19937_64 rng(5);
  for (int it = 0; it < 150; ++it) {
    UniPoly p = oracle::random_unipoly(rng, 8, 20);
    if (p.degree() < 1) continue;
    p = squarefree_part(p);
    const auto roots = isolate(p);
    Rational bound(0);
    for (const auto& c : p.coeffs()) bound = std::max(bound, Rational(abs(c) / abs(p.lead())));
    const Interval wide{-1 - bound - 1, 1 + bound + 1};
    CHECK(static_cast<int>(roots.size()) == sturm_count(p, wide));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      CHECK(sign_change(roots[i]));
      CHECK(sturm_count(roots[i].defining(), roots[i].isol()) == 1);
      if (i + 1 < roots.size()) CHECK(roots[i].isol().hi < roots[i + 1].isol().lo);
    }
  }
}

TEST_CASE("refine") {
  const auto r = isolate(U("x1^2 - 2"));
  const auto s = refine(r[1], Rational(1, 100));
  CHECK(s.isol().width() < Rational(1, 100));
  CHECK(sign_change(s));
  CHECK(Rational(141, 100) < s.isol().mid());
  CHECK(s.isol().mid() < Rational(142, 100));
  const auto t = refine(s, Rational(1));
  CHECK(t.isol() == s.isol());
  const auto z = refine(AlgebraicNumber::rational(Rational(3, 7)), Rational(1, 1000));
  CHECK(z.isol().width() < Rational(1, 1000));
  CHECK(z.rational_value() == Rational(3, 7));
}

TEST_CASE("refine never loses the root") {
  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    UniPoly p = oracle::random_unipoly(rng, 6, 9);
    if (p.degree() < 1) continue;
    for (const auto& a : isolate(squarefree_part(p))) {
      Rational eps(1, 10);
      AlgebraicNumber b = a;
      for (int k = 0; k < 8; ++k, eps /= 1000) {
        b = refine(b, eps);
        CHECK(b.isol().width() < eps);
        CHECK(sign_change(b));
        CHECK(b.isol().inside(a.isol()));
      }
    }
  }
}

TEST_CASE("sturm_count") {
  CHECK(sturm_count(U("x1^2 - 2"), {0, 2}) == 1);
  CHECK(sturm_count(U("x1^2 - 2"), {-2, 2}) == 2);
  CHECK(sturm_count(U("x1^2 + 1"), {-10, 10}) == 0);
  CHECK_THROWS_AS(sturm_count(U("x1^2 - 1"), {1, 3}), Error);
}

TEST_CASE("common_roots") {
  CHECK(common_roots(U("x1^2 + x1"), U("x1")) == std::vector<bool>{false, true});
  CHECK(common_roots(U("x1^2 - 2"), U("x1^2 + 1")) == std::vector<bool>{false, false});
  CHECK(common_roots(U("x1^3 - 2*x1"), U("x1^3 - 2*x1")) == std::vector<bool>{true, true, true});
  CHECK(common_roots(U("x1^3 - 2*x1"), U("x1^2 - 2")) == std::vector<bool>{true, false, true});
}

TEST_CASE("common_roots agrees with interval-overlap brute force") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> root(-6, 6), count(1, 4);
  const Rational fine(1, Integer("1000000000000000000000000000000"));
  for (int it = 0; it < 80; ++it) {
    std::vector<int> rp, rq;
    for (int k = count(rng); k > 0; --k) rp.push_back(root(rng));
    for (int k = count(rng); k > 0; --k) rq.push_back(root(rng));
    // Irrational roots too: multiply by x^2 - 2 at random.
    UniPoly p = squarefree_part(product_of_roots(rp) * (it % 2 ? U("x1^2 - 2") : U("1")));
    UniPoly q = squarefree_part(product_of_roots(rq) * (it % 3 ? U("x1^2 - 2") : U("1")));
    const auto flags = common_roots(p, q);
    const auto pr = isolate(p);
    const auto qr = isolate(q);
    for (std::size_t i = 0; i < pr.size(); ++i) {
      const Interval a = refine(pr[i], fine).isol();
      bool overlap = false;
      for (const auto& b : qr) overlap = overlap || !a.disjoint(refine(b, fine).isol());
      CHECK(flags[i] == overlap);
    }
  }
}

TEST_CASE("sign_at examples") {
  const auto r = isolate(U("x1^2 - 2"));
  CHECK(sign_at(U("x1 - 1"), r[1]) == 1);
  CHECK(sign_at(U("x1^2 - 2"), r[1]) == 0);
  CHECK(sign_at(U("x1"), r[0]) == -1);
  CHECK(sign_at(U("x1^4 - 4"), r[0]) == 0);
  CHECK(sign_at(U("x1^3 - 2*x1 + 1/1000000"), r[1]) == 1);
}

TEST_CASE("sign_at agrees with 256-bit floating evaluation") {
  std::mt19937_64 rng(99);
  int compared = 0;
  while (compared < 1000) {
    UniPoly d = oracle::random_unipoly(rng, 5, 9);
    if (d.degree() < 2) continue;
    d = squarefree_part(d);
    const auto roots = isolate(d);
    if (roots.empty()) continue;
    const auto& a = roots[rng() % roots.size()];
    const UniPoly p = oracle::random_unipoly(rng, 5, 9);
    const oracle::BigFloat x = oracle::bisect_root(a.defining(), a.isol().lo, a.isol().hi);
    const oracle::BigFloat v = oracle::eval(p, x);
    if (std::abs(v.to_double()) < 1e-12) continue;
    CHECK(sign_at(p, a) == v.sign());
    ++compared;
  }
}

TEST_CASE("compare") {
  const auto r2 = isolate(U("x1^2 - 2"));
  const auto r3 = isolate(U("x1^2 - 3"));
  const auto r8 = isolate(U("x1^4 - 4"));
  CHECK(compare(r2[1], r3[1]) == -1);
  CHECK(compare(r3[0], r2[0]) == -1);
  CHECK(compare(r8[1], r2[1]) == 0);
  CHECK(compare(AlgebraicNumber::rational(Rational(3, 2)), r2[1]) == 1);
}

TEST_CASE("fiber_roots at rational abscissas") {
  const auto circle = fiber_roots(B("x1^2 + x2^2 - 1"), AlgebraicNumber::rational(0));
  REQUIRE(circle.size() == 2);
  CHECK(circle[0].exact->rational_value() == -1);
  CHECK(circle[1].exact->rational_value() == 1);
  CHECK(circle[0].multiplicity == 1);

  for (int a : {0, -1}) {
    const auto node = fiber_roots(B("x2^2 - x1^3 - x1^2"), AlgebraicNumber::rational(a));
    REQUIRE(node.size() == 1);
    CHECK(node[0].multiplicity == 2);
    CHECK(node[0].exact->rational_value() == 0);
  }
}

TEST_CASE("fiber_roots at irrational abscissas") {
  const auto half = isolate(U("2*x1^2 - 1"));
  const auto c = fiber_roots(B("x1^2 + x2^2 - 1"), half[1], std::nullopt, Rational(1, 1000000));
  REQUIRE(c.size() == 2);
  CHECK(c[0].box.width() < Rational(1, 1000000));
  CHECK(c[0].box.hi < c[1].box.lo);
  CHECK(std::abs(c[1].box.mid().get_d() - 0.70710678118) < 1e-6);

  // Double root at (sqrt 2, sqrt 2) plus simple roots +-sqrt 3.
  const BiPoly w = B("((x2 - x1)^2 - (x1^2 - 2)) * (x2^2 - 3)");
  const auto hint = first_subresultant_x2(w, partial(w, Var::x2));
  const auto s2 = isolate(U("x1^2 - 2"));
  const auto f = fiber_roots(w, s2[1], hint, Rational(1, 1000000));
  REQUIRE(f.size() == 3);
  CHECK(f[0].multiplicity == 1);
  CHECK(f[1].multiplicity == 2);
  CHECK(f[2].multiplicity == 1);
  CHECK(std::abs(f[0].box.mid().get_d() + 1.7320508) < 1e-5);
  CHECK(std::abs(f[1].box.mid().get_d() - 1.4142136) < 1e-5);
  CHECK(std::abs(f[2].box.mid().get_d() - 1.7320508) < 1e-5);
}

TEST_CASE("fiber_roots: multiple ordinate equals -sr10/sr1 at rational abscissas") {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int it = 0; it < 300 && checked < 60; ++it) {
    // omega = (x2 - a(x1))^2 h + (x1 - t) k has a multiple ordinate a(t) above t.
    Rational t(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1);
    t.canonicalize();
    const UniPoly ua = oracle::random_unipoly(rng, 2, 4);
    const BiPoly a = BiPoly::from_x1(ua);
    const BiPoly sq = (B("x2") - a) * (B("x2") - a);
    const BiPoly h = B("x2^2") + oracle::random_bipoly(rng, 1, 1, 4);
    const BiPoly k = oracle::random_bipoly(rng, 1, 3, 4);
    const BiPoly omega = sq * h + (B("x1") - BiPoly::constant(t)) * k;
    if (omega.degree_x2() != 4 || omega.leading_x2_coeff() != UniPoly::constant(1)) continue;
    const UniPoly fib = eval_fiber(omega, t);
    const UniPoly g = gcd(fib, derivative(fib));
    if (g.degree() != 1) continue;
    const auto sr = first_subresultant_x2(omega, partial(omega, Var::x2));
    if (sr.sr1(t) == 0) continue;
    const Rational beta = -sr.sr10(t) / sr.sr1(t);
    CHECK(beta == ua(t));
    const auto roots = fiber_roots(omega, AlgebraicNumber::rational(t), std::nullopt, Rational(1, Integer("100000000000000000000")));
    int doubles = 0;
    for (const auto& r : roots) {
      if (r.multiplicity == 2) {
        ++doubles;
        CHECK(r.box.contains(beta));
      }
    }
    CHECK(doubles == 1);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("fiber_roots rejects a non-monic omega") {
  CHECK_THROWS_AS(fiber_roots(B("x1*x2^2 + 1"), AlgebraicNumber::rational(1)), Error);
}
