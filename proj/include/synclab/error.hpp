#pragma once

#include <stdexcept>
#include <string>

namespace synclab {

enum class ErrorCode {
  InvalidArgument,
  DimensionMismatch,
  NonUnitary,
  NonOrthogonal,
  DegenerateDenominator,
  ZeroFactor,
  SingularDifference,
  CoincidentPhase,
  CoincidentPoint,
  PassedThroughProjectionPoint,
  StepSizeUnderflow,
  NonFiniteState,
  IntegratorFailure,
  MismatchedGrids,
  UnknownFunctional,
  Schema,
  Io,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace synclab
