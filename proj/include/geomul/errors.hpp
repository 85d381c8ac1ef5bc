#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geomul {

/// Every failure the engine can report. DSL runtime errors carry exactly one
/// of these codes.
enum class ErrorCode {
  DivisionByZero,
  CoincidentPoints,
  ParallelLines,
  CoincidentLines,
  NoUniqueIntercept,
  NoIntercept,
  DegenerateRay,
  DegenerateTriangle,
  ZeroHasNoInverse,
  NotAWholeNumber,
  NonPositiveInput,
  InputOutOfRange,
  DegenerateConfiguration,
  ZeroDenominator,
  InternalInconsistency,
  MalformedTrace,
};

std::string_view to_string(ErrorCode code) noexcept;

class EngineError : public std::runtime_error {
 public:
  EngineError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geomul
