#pragma once

#include <string>
#include <string_view>

#include "ccq/bipoly.hpp"
#include "ccq/error.hpp"
#include "ccq/unipoly.hpp"

namespace ccq {

/// Error(ParseError) raised by the polynomial parsers, with the 1-based column.
class PolyParseError : public Error {
 public:
  PolyParseError(int column, const std::string& msg)
      : Error(ErrorCode::ParseError, "column " + std::to_string(column) + ": " + msg), column_(column), msg_(msg) {}
  int column() const noexcept { return column_; }
  const std::string& message() const noexcept { return msg_; }

 private:
  int column_;
  std::string msg_;
};

/// Polynomial in x1, x2 from text such as "x2^2 - x1^3 - 3/4*x1". Grammar:
/// integer and rational literals, variables, + - * ^ (non-negative integer
/// exponents), parentheses; whitespace is ignored. Division is only allowed by
/// a literal. Errors are Error(ParseError) whose message carries the 1-based column.
BiPoly parse_bipoly(std::string_view text);

/// Univariate polynomial; the variable may be written x1 or u.
UniPoly parse_unipoly(std::string_view text);

}  // namespace ccq
