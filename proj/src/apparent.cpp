#include "ccq/apparent.hpp"

#include "ccq/error.hpp"
#include "ccq/subresultant.hpp"

namespace ccq {

ApparentResult apparent_singularities(const OneDimParam& C) {
  const BiPoly& w = C.omega;
  if (w.degree_x2() < 1) throw Error(ErrorCode::InvalidInput, "omega has no positive x2-degree");
  const BiPoly wy = partial(w, Var::x2);
  ApparentResult res;
  res.R = resultant_x2(w, wy);
  if (res.R.is_zero()) throw Error(ErrorCode::DegenerateCurve, "Res_x2(omega, omega_y) vanishes identically");
  res.R_star = squarefree_part(res.R);
  const UniPoly d1 = derivative(res.R);
  const UniPoly d2 = derivative(d1);
  const UniPoly g1 = gcd(res.R_star, d1);
  res.q = monic(exact_div(g1, gcd(g1, d2)));
  if (w.degree_x2() >= 2) {
    const auto s = first_subresultant_x2(w, wy);
    res.sr1 = s.sr1;
    res.sr10 = s.sr10;
  }
  res.q_app = UniPoly::constant(1);
  if (C.n < 3 || C.rhos.empty() || res.q.degree() < 1) return res;

  // A node above a root of q is apparent iff the criterion is nonzero at the
  // fiber's double point (-sr10/sr1); homogenizing clears the denominator.
  const BiPoly& rho3 = C.rhos[0];
  res.A = partial(wy, Var::x2) * partial(rho3, Var::x1) - partial(wy, Var::x1) * partial(rho3, Var::x2);
  res.B = res.A.is_zero() ? UniPoly{} : homogenized_substitute(res.A, -res.sr10, res.sr1);
  const UniPoly g = gcd(res.q, res.B);
  res.q_app = monic(exact_div(res.q, g));
  res.criterion_degenerate = res.q_app.degree() == 0;
  return res;
}

std::vector<AlgebraicNumber> apparent_abscissas(const ApparentResult& res) { return isolate(res.q_app); }

}  // namespace ccq
