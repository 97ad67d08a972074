#include "transgeo/error.hpp"

namespace transgeo {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidParam: return "InvalidParam";
    case ErrorCode::NullVector: return "NullVector";
    case ErrorCode::OutsideCone: return "OutsideCone";
    case ErrorCode::NotTangent: return "NotTangent";
    case ErrorCode::NotUnitTangent: return "NotUnitTangent";
    case ErrorCode::ZeroParam: return "ZeroParam";
    case ErrorCode::NonPositiveParam: return "NonPositiveParam";
    case ErrorCode::MixedParam: return "MixedParam";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::CoincidentWithVertex: return "CoincidentWithVertex";
    case ErrorCode::CoincidentLines: return "CoincidentLines";
    case ErrorCode::DegenerateTriangle: return "DegenerateTriangle";
    case ErrorCode::NoRightAngle: return "NoRightAngle";
    case ErrorCode::InvalidSides: return "InvalidSides";
    case ErrorCode::InsufficientSamples: return "InsufficientSamples";
    case ErrorCode::TooFewPoints: return "TooFewPoints";
    case ErrorCode::EvaluatorDomainError: return "EvaluatorDomainError";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::UnknownQuantity: return "UnknownQuantity";
  }
  return "Unknown";
}

}  // namespace transgeo
