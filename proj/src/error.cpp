#include "synclab/error.hpp"

namespace synclab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonUnitary: return "NonUnitary";
    case ErrorCode::NonOrthogonal: return "NonOrthogonal";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::ZeroFactor: return "ZeroFactor";
    case ErrorCode::SingularDifference: return "SingularDifference";
    case ErrorCode::CoincidentPhase: return "CoincidentPhase";
    case ErrorCode::CoincidentPoint: return "CoincidentPoint";
    case ErrorCode::PassedThroughProjectionPoint: return "PassedThroughProjectionPoint";
    case ErrorCode::StepSizeUnderflow: return "StepSizeUnderflow";
    case ErrorCode::NonFiniteState: return "NonFiniteState";
    case ErrorCode::IntegratorFailure: return "IntegratorFailure";
    case ErrorCode::MismatchedGrids: return "MismatchedGrids";
    case ErrorCode::UnknownFunctional: return "UnknownFunctional";
    case ErrorCode::Schema: return "Schema";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace synclab
