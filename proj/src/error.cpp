#include "psbck/error.hpp"

namespace psbck {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::kInvalidMap: return "InvalidMap";
    case ErrorCode::kUnboundedAlgebra: return "UnboundedAlgebra";
    case ErrorCode::kCarrierTooLarge: return "CarrierTooLarge";
    case ErrorCode::kParentMismatch: return "ParentMismatch";
    case ErrorCode::kGlivenkoRequired: return "GlivenkoRequired";
    case ErrorCode::kWellDefinednessFailure: return "WellDefinednessFailure";
    case ErrorCode::kNotNormal: return "NotNormal";
    case ErrorCode::kNotVds: return "NotVds";
    case ErrorCode::kSurjectivityRequired: return "SurjectivityRequired";
    case ErrorCode::kKernelContainmentViolated: return "KernelContainmentViolated";
    case ErrorCode::kPPRequired: return "PPRequired";
    case ErrorCode::kNotFLw: return "NotFLw";
    case ErrorCode::kNotSmarandache: return "NotSmarandache";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kUsage: return "Usage";
  }
  return "Unknown";
}

}  // namespace psbck
