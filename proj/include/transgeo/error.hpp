#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace transgeo {

// Values are mirrored one-to-one by tg_status in transgeo.h.
enum class ErrorCode : int {
  InvalidArgument = 1,
  InvalidParam,
  NullVector,
  OutsideCone,
  NotTangent,
  NotUnitTangent,
  ZeroParam,
  NonPositiveParam,
  MixedParam,
  CoincidentPoints,
  CoincidentWithVertex,
  CoincidentLines,
  DegenerateTriangle,
  NoRightAngle,
  InvalidSides,
  InsufficientSamples,
  TooFewPoints,
  EvaluatorDomainError,
  NoConvergence,
  IllConditioned,
  UnknownQuantity,
};

std::string_view error_name(ErrorCode code) noexcept;

class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw GeometryError(code, what);
}

}  // namespace transgeo
