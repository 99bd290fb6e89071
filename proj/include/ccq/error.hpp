#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ccq {

enum class ErrorCode {
  BothZero,
  ZeroInput,
  DegenerateInput,
  ZeroDenominator,
  NotSquareFree,
  RootAtEndpoint,
  GenericityViolation,
  CriticalPoint,
  DegenerateCurve,
  InvalidInput,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// Single exception type for the library; `code()` drives CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace ccq
