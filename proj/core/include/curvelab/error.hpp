#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvelab {

enum class ErrorCode {
  SyntaxError,
  UnknownVariable,
  DimensionMismatch,
  DivisionByZero,
  ExtensionLimit,
  NotReduced,
  PointNotOnCurve,
  DepthExceeded,
  Unresolved,
  NonReducedModel,
  NonIsolatedCriticalPoint,
  DuplicateSlope,
  ParameterClash,
  NonReducedResult,
  UnknownName,
  SingularSurfacePoint,
  NonReducedSection,
  EliminationTooLarge,
  InvalidArgument,
};

std::string_view error_code_name(ErrorCode code);

/// Every engine failure is reported through this type; `code()` is stable
/// and is what the CLI serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, std::string expected)
      : Error(ErrorCode::SyntaxError,
              "syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace curvelab
