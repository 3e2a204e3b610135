#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wulff {

enum class ErrorCode {
  InvalidInput,
  AntipodalPair,
  EquatorOrBelow,
  OriginNotInvertible,
  DegenerateIntersection,
  OriginNotInterior,
  DualMismatch,
  NotHemispherical,
  NotSupporting,
  VerdictMismatch,
  EmptyOrLowerDimensional,
  RedundantPole,
  BodyLeavesHemisphere,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries one of the codes above so the
// CLI can map it to an exit status without parsing messages.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wulff
