#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccq/apparent.hpp"
#include "ccq/params.hpp"

namespace ccq {

enum class CheckStatus { pass, fail, unknown };

struct GenericityCheck {
  std::string name;
  CheckStatus status = CheckStatus::unknown;
  std::string detail;
};

/// Necessary consequences of the generic-position hypotheses that can be
/// decided from the parametrizations alone. Inputs must already validate.
/// Checks, in order:
///   discriminant_nonzero      R = Res_x2(omega, omega_y) is not identically 0
///   unique_multiple_ordinate  at most one real multiple ordinate above each real root of q:
///                             sr1 nonzero there, or the fiber is rational and checked exactly
///   critical_fibers_simple    the same condition at every real root of R
///   queries_avoid_critical    gcd(lambda, R) is constant
///   node_multiplicity         every root of q_app is a root of R of multiplicity exactly 2
///   node_criterion            the node criterion does not vanish at every node abscissa
///   queries_on_curve          each query point lies on the curve (exact)
///   tangent_projection, pi3_injective, no_singular_secants  reported unknown
std::vector<GenericityCheck> genericity_report(const OneDimParam& C, const std::optional<ZeroDimParam>& P);

/// Same, reusing an already computed ApparentResult.
std::vector<GenericityCheck> genericity_report(const OneDimParam& C, const std::optional<ZeroDimParam>& P,
                                               const ApparentResult& app);

std::string to_string(CheckStatus s);

/// First failing check, if any.
const GenericityCheck* first_failure(const std::vector<GenericityCheck>& checks);

}  // namespace ccq
