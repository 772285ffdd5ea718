#pragma once

#include <stdexcept>
#include <string>

namespace polyfam {

enum class ErrorCode {
  NotCoplanar,
  Degenerate,
  NotConvex,
  DuplicateVertex,
  DuplicatePoint,
  DuplicatePolygon,
  TooFewVertices,
  IndexOutOfRange,
  ZeroVector,
  NotHexagon,
  SamePolygon,
  BadTranslation,
  InfeasibleParams,
  NoGenericDirection,
  ThetaTooLarge,
  NotFat,
  SharedDiagonal,
  NoBadPairFound,
  BoundViolation,
  InvalidArgument,
  ParseError,
  PrecisionExhausted,
};

const char* to_string(ErrorCode code);

// All library failures are reported through this type; code() is the
// machine-readable part, what() carries the human-readable context.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace polyfam
