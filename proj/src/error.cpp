#include "nk6/error.hpp"

namespace nk6 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotStable: return "NotStable";
    case ErrorCode::SqrtNotRepresentable: return "SqrtNotRepresentable";
    case ErrorCode::NotStable2Form: return "NotStable2Form";
    case ErrorCode::NotStable3Form: return "NotStable3Form";
    case ErrorCode::NotCompatible: return "NotCompatible";
    case ErrorCode::ZeroLength: return "ZeroLength";
    case ErrorCode::DegenerateMetric: return "DegenerateMetric";
    case ErrorCode::SymmetryViolation: return "SymmetryViolation";
    case ErrorCode::NotG1: return "NotG1";
    case ErrorCode::NearSingular: return "NearSingular";
    case ErrorCode::NullCaseDegenerate: return "NullCaseDegenerate";
    case ErrorCode::UnknownName: return "UnknownName";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace nk6
