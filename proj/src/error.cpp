#include "k3deg/error.hpp"

namespace k3deg {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "E_PARSE";
    case ErrorCode::NotPoly: return "E_NOT_POLY";
    case ErrorCode::Degree: return "E_DEGREE";
    case ErrorCode::NotMinimal: return "E_NOT_MINIMAL";
    case ErrorCode::ZeroForm: return "E_ZERO_FORM";
    case ErrorCode::UnrecognizedCusp: return "E_UNRECOGNIZED_CUSP";
    case ErrorCode::NN: return "E_NN";
    case ErrorCode::NNInterior: return "E_NN_INTERIOR";
    case ErrorCode::NegativeV: return "E_NEGATIVE_V";
    case ErrorCode::InconsistentType: return "E_INCONSISTENT_TYPE";
    case ErrorCode::BadIndex: return "E_BAD_INDEX";
    case ErrorCode::NoConvergence: return "E_NO_CONVERGENCE";
    case ErrorCode::OracleMismatch: return "E_ORACLE_MISMATCH";
    case ErrorCode::Precondition: return "E_PRECONDITION";
  }
  return "E_UNKNOWN";
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse:
      return 2;
    case ErrorCode::NotPoly:
    case ErrorCode::Degree:
    case ErrorCode::NotMinimal:
    case ErrorCode::ZeroForm:
    case ErrorCode::NegativeV:
    case ErrorCode::Precondition:
      return 3;
    case ErrorCode::UnrecognizedCusp:
    case ErrorCode::NN:
    case ErrorCode::NNInterior:
      return 4;
    case ErrorCode::InconsistentType:
    case ErrorCode::BadIndex:
      return 5;
    case ErrorCode::NoConvergence:
    case ErrorCode::OracleMismatch:
      return 6;
  }
  return 1;
}

}  // namespace k3deg
