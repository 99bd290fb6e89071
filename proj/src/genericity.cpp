#include "ccq/genericity.hpp"

#include "ccq/error.hpp"
#include "ccq/realroot.hpp"
#include "ccq/subresultant.hpp"

namespace ccq {

namespace {

GenericityCheck pass(std::string name, std::string detail = {}) {
  return {std::move(name), CheckStatus::pass, std::move(detail)};
}
GenericityCheck fail(std::string name, std::string detail) { return {std::move(name), CheckStatus::fail, std::move(detail)}; }
GenericityCheck unknown(std::string name, std::string detail) {
  return {std::move(name), CheckStatus::unknown, std::move(detail)};
}

int real_multiple_roots(const BiPoly& omega, const Rational& a) {
  int count = 0;
  for (const auto& [f, m] : squarefree_decomposition(eval_fiber(omega, a))) {
    if (m > 1) count += static_cast<int>(isolate(f).size());
  }
  return count;
}

// sr1(a) != 0 means a single multiple root over C. Otherwise a rational
// fiber is decided exactly, and only its real multiple roots count.
bool single_real_multiple_root(const BiPoly& omega, const UniPoly& sr1, const AlgebraicNumber& a) {
  if (sign_at(sr1, a) != 0) return true;
  return a.is_rational() && real_multiple_roots(omega, a.rational_value()) <= 1;
}

std::string describe(const AlgebraicNumber& a) {
  return a.is_rational() ? to_string(a.rational_value()) : "a root of " + to_string(a.defining());
}

void append_undecidable(std::vector<GenericityCheck>& out) {
  out.push_back(unknown("tangent_projection", "not decidable from the parametrization"));
  out.push_back(unknown("pi3_injective", "not decidable from the parametrization"));
  out.push_back(unknown("no_singular_secants", "not decidable from the parametrization"));
}

GenericityCheck queries_on_curve(const OneDimParam& C, const ZeroDimParam& P) {
  const int d = C.omega.degree_x2();
  const UniPoly dl = derivative(P.lambda);
  const UniPoly& theta2 = P.thetas[0];
  // lambda'^d * omega(beta, theta2/lambda') vanishes iff the projected point is on C2.
  const UniPoly W = homogenized_substitute(C.omega, theta2, dl, d);
  std::vector<UniPoly> lifts;
  if (!C.rhos.empty()) {
    const BiPoly wy = partial(C.omega, Var::x2);
    for (std::size_t i = 0; i < C.rhos.size(); ++i) {
      const BiPoly e = BiPoly::from_x1(P.thetas[i + 1]) * wy - BiPoly::from_x1(dl) * C.rhos[i];
      lifts.push_back(e.is_zero() ? UniPoly{} : homogenized_substitute(e, theta2, dl, std::max(d - 1, e.degree_x2())));
    }
  }
  const auto roots = isolate(P.lambda);
  for (std::size_t k = 0; k < roots.size(); ++k) {
    if (sign_at(W, roots[k]) != 0) {
      return fail("queries_on_curve", "query " + std::to_string(k + 1) + " does not lie on the plane projection");
    }
    for (std::size_t i = 0; i < lifts.size(); ++i) {
      if (!lifts[i].is_zero() && sign_at(lifts[i], roots[k]) != 0) {
        return fail("queries_on_curve", "query " + std::to_string(k + 1) + " has x" + std::to_string(i + 3) +
                                            " off the curve");
      }
    }
  }
  return pass("queries_on_curve", std::to_string(roots.size()) + " real query points");
}

}  // namespace

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::unknown:
      break;
  }
  return "unknown";
}

const GenericityCheck* first_failure(const std::vector<GenericityCheck>& checks) {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) return &c;
  }
  return nullptr;
}

std::vector<GenericityCheck> genericity_report(const OneDimParam& C, const std::optional<ZeroDimParam>& P) {
  try {
    return genericity_report(C, P, apparent_singularities(C));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::DegenerateCurve) throw;
    std::vector<GenericityCheck> out{fail("discriminant_nonzero", "Res_x2(omega, omega_y) is identically zero")};
    for (const char* name : {"unique_multiple_ordinate", "critical_fibers_simple", "queries_avoid_critical",
                             "node_multiplicity", "node_criterion", "queries_on_curve"}) {
      out.push_back(unknown(name, "discriminant vanishes"));
    }
    append_undecidable(out);
    return out;
  }
}

std::vector<GenericityCheck> genericity_report(const OneDimParam& C, const std::optional<ZeroDimParam>& P,
                                               const ApparentResult& app) {
  std::vector<GenericityCheck> out;
  out.push_back(pass("discriminant_nonzero", "R = " + to_string(app.R)));

  // Only real fibers matter to the sweep; complex roots of q are not checked.
  std::string bad_q;
  if (C.omega.degree_x2() >= 2 && app.q.degree() >= 1) {
    for (const auto& a : isolate(app.q)) {
      if (!single_real_multiple_root(C.omega, app.sr1, a)) {
        bad_q = describe(a);
        break;
      }
    }
  }
  if (bad_q.empty()) {
    out.push_back(pass("unique_multiple_ordinate"));
  } else {
    out.push_back(fail("unique_multiple_ordinate", "sr1 vanishes at the node abscissa x1 = " + bad_q));
  }

  const auto crit = app.R_star.degree() > 0 ? isolate(app.R_star) : std::vector<AlgebraicNumber>{};
  std::string bad;
  if (C.omega.degree_x2() >= 2) {
    for (const auto& a : crit) {
      if (!single_real_multiple_root(C.omega, app.sr1, a)) {
        bad = describe(a);
        break;
      }
    }
  }
  if (bad.empty()) {
    out.push_back(pass("critical_fibers_simple", std::to_string(crit.size()) + " real critical abscissas"));
  } else {
    out.push_back(fail("critical_fibers_simple", "several multiple ordinates above x1 = " + bad));
  }

  if (!P) {
    out.push_back(pass("queries_avoid_critical", "no queries"));
  } else if (gcd(P->lambda, app.R).degree() > 0) {
    out.push_back(fail("queries_avoid_critical", "lambda shares a root with R"));
  } else {
    out.push_back(pass("queries_avoid_critical"));
  }

  if (app.q_app.degree() < 1) {
    out.push_back(pass("node_multiplicity", "q_app = 1"));
  } else {
    const UniPoly sq = app.q_app * app.q_app;
    if (!divides(sq, app.R) || gcd(exact_div(app.R, sq), app.q_app).degree() > 0) {
      out.push_back(fail("node_multiplicity", "a root of q_app is not a double root of R"));
    } else {
      out.push_back(pass("node_multiplicity"));
    }
  }

  if (app.criterion_degenerate) {
    out.push_back(fail("node_criterion", "the node criterion vanishes at every root of q"));
  } else {
    out.push_back(pass("node_criterion"));
  }

  if (!P) {
    out.push_back(pass("queries_on_curve", "no queries"));
  } else {
    out.push_back(queries_on_curve(C, *P));
  }
  append_undecidable(out);
  return out;
}

}  // namespace ccq
