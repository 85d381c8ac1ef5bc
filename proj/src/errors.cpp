#include "geomul/errors.hpp"

namespace geomul {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::ParallelLines: return "ParallelLines";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::NoUniqueIntercept: return "NoUniqueIntercept";
    case ErrorCode::NoIntercept: return "NoIntercept";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::ZeroHasNoInverse: return "ZeroHasNoInverse";
    case ErrorCode::NotAWholeNumber: return "NotAWholeNumber";
    case ErrorCode::NonPositiveInput: return "NonPositiveInput";
    case ErrorCode::InputOutOfRange: return "InputOutOfRange";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::MalformedTrace: return "MalformedTrace";
  }
  return "Unknown";
}

}  // namespace geomul
