#pragma once

#include "ccq/bipoly.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// Res_{x2}(f, g) with the Sylvester-determinant sign convention (rows of f first).
/// Requires f, g nonzero and deg_x2 f > 0; Error(DegenerateInput) otherwise.
UniPoly resultant_x2(const BiPoly& f, const BiPoly& g);

/// Coefficients of the degree-1 subresultant S1 = sr1 * x2 + sr10 of (f, g).
struct FirstSubresultant {
  UniPoly sr1;
  UniPoly sr10;
};

/// Determinantal S1 of (f, g) w.r.t. x2 (same row convention as resultant_x2).
/// Requires deg_x2 f >= 2 and deg_x2 g >= 1; Error(DegenerateInput) otherwise.
FirstSubresultant first_subresultant_x2(const BiPoly& f, const BiPoly& g);

/// Determinantal subresultant S_j of (f, g) w.r.t. x2, for 0 <= j < min(deg f, deg g),
/// or j = min(deg f, deg g) when the degrees differ.
BiPoly subresultant_x2(const BiPoly& f, const BiPoly& g, int j);

}  // namespace ccq
