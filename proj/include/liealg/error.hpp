#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace liealg {

enum class ErrorCode {
  DivisionByZero,
  AmbientMismatch,
  DimensionMismatch,
  SingularMatrix,
  NotASubalgebra,
  NotAnIdeal,
  NotNilpotent,
  NotSolvableNonnilpotent,
  WrongTag,
  InternalContradiction,
  ConstraintViolation,
  NotQuotientPreserving,
  InvalidParameters,
  UnknownLabel,
  MissingParameter,
  InvalidParameter,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Domain error carrying a stable code name plus free-form context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::string context = {})
      : std::runtime_error(message), code_(code), context_(std::move(context)) {}

  ErrorCode code() const noexcept { return code_; }
  const std::string& context() const noexcept { return context_; }

 private:
  ErrorCode code_;
  std::string context_;
};

}  // namespace liealg
