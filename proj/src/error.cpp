#include "brauerion/error.hpp"

namespace brauerion {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ConductorMismatch: return "ConductorMismatch";
    case ErrorCode::LiftFailure: return "LiftFailure";
    case ErrorCode::NotSolvable: return "NotSolvable";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::NoLift: return "NoLift";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::PrimeMismatch: return "PrimeMismatch";
    case ErrorCode::NonRationalResult: return "NonRationalResult";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NoExtensionFound: return "NoExtensionFound";
    case ErrorCode::BadSpec: return "BadSpec";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(error_name(code)) + ": " + detail),
      code_(code),
      detail_(detail) {}

}  // namespace brauerion
