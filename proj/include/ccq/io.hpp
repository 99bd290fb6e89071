#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "ccq/params.hpp"

namespace ccq {

/// Input file: {"curve": {"n", "omega", "rhos"}, "queries": {"lambda", "thetas"},
/// "options": {"eps", "dot", "svg"}}. Polynomials are strings ("x2^2 - x1^3")
/// or arrays of terms [e1, e2, "coeff"] ([e, "coeff"] for univariate ones);
/// queries may use u or x1 as their variable. Unknown keys are ignored.
struct ProblemFile {
  OneDimParam curve;
  std::optional<ZeroDimParam> queries;
  std::optional<Rational> eps;
  std::optional<std::string> dot_path;
  std::optional<std::string> svg_path;

  friend bool operator==(const ProblemFile&, const ProblemFile&) = default;
};

/// Error(ParseError) with "line L, column C" for malformed JSON and for
/// polynomial strings, and the JSON path for structural problems.
ProblemFile parse_problem(std::string_view text);

/// Reads and parses a file; an unreadable file is a ParseError as well.
ProblemFile load_problem(const std::string& path);

/// Canonical JSON text (polynomials as strings); parse_problem inverts it.
std::string serialize_problem(const ProblemFile& p);

}  // namespace ccq
