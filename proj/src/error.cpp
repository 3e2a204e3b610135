#include "wulff/error.hpp"

namespace wulff {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::AntipodalPair: return "AntipodalPair";
    case ErrorCode::EquatorOrBelow: return "EquatorOrBelow";
    case ErrorCode::OriginNotInvertible: return "OriginNotInvertible";
    case ErrorCode::DegenerateIntersection: return "DegenerateIntersection";
    case ErrorCode::OriginNotInterior: return "OriginNotInterior";
    case ErrorCode::DualMismatch: return "DualMismatch";
    case ErrorCode::NotHemispherical: return "NotHemispherical";
    case ErrorCode::NotSupporting: return "NotSupporting";
    case ErrorCode::VerdictMismatch: return "VerdictMismatch";
    case ErrorCode::EmptyOrLowerDimensional: return "EmptyOrLowerDimensional";
    case ErrorCode::RedundantPole: return "RedundantPole";
    case ErrorCode::BodyLeavesHemisphere: return "BodyLeavesHemisphere";
  }
  return "Unknown";
}

GeometryError::GeometryError(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace wulff
