#include "polyfam/error.hpp"

namespace polyfam {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotCoplanar: return "NotCoplanar";
    case ErrorCode::Degenerate: return "Degenerate";
    case ErrorCode::NotConvex: return "NotConvex";
    case ErrorCode::DuplicateVertex: return "DuplicateVertex";
    case ErrorCode::DuplicatePoint: return "DuplicatePoint";
    case ErrorCode::DuplicatePolygon: return "DuplicatePolygon";
    case ErrorCode::TooFewVertices: return "TooFewVertices";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NotHexagon: return "NotHexagon";
    case ErrorCode::SamePolygon: return "SamePolygon";
    case ErrorCode::BadTranslation: return "BadTranslation";
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::NoGenericDirection: return "NoGenericDirection";
    case ErrorCode::ThetaTooLarge: return "ThetaTooLarge";
    case ErrorCode::NotFat: return "NotFat";
    case ErrorCode::SharedDiagonal: return "SharedDiagonal";
    case ErrorCode::NoBadPairFound: return "NoBadPairFound";
    case ErrorCode::BoundViolation: return "BoundViolation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message),
      code_(code) {}

}  // namespace polyfam
