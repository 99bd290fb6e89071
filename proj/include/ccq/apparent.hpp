#pragma once

#include <vector>

#include "ccq/bipoly.hpp"
#include "ccq/params.hpp"
#include "ccq/realroot.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// q_app and the intermediate polynomials of its computation.
struct ApparentResult {
  UniPoly q_app;   // monic, square-free; roots = abscissas of apparent nodes
  UniPoly R;       // Res_x2(omega, omega_y)
  UniPoly R_star;  // square-free part of R
  UniPoly q;       // roots of R of multiplicity exactly 2
  UniPoly sr1;     // first subresultant of (omega, omega_y): sr1 * x2 + sr10
  UniPoly sr10;
  BiPoly A;        // node criterion omega_yy * rho3_x - omega_xy * rho3_y
  UniPoly B;       // A homogenized in x2, evaluated at x2 = -sr10 / sr1
  /// Set when q is nonconstant and B vanishes at all of its roots: no node
  /// can be told apart, which the hypotheses rule out.
  bool criterion_degenerate = false;
};

/// Error(DegenerateCurve) when R is identically zero.
ApparentResult apparent_singularities(const OneDimParam& C);

/// Real roots of q_app in ascending order.
std::vector<AlgebraicNumber> apparent_abscissas(const ApparentResult& res);

}  // namespace ccq
