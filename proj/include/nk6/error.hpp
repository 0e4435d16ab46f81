#pragma once

#include <stdexcept>
#include <string>

namespace nk6 {

enum class ErrorCode {
  FieldMismatch,
  NotRepresentable,
  DimensionMismatch,
  InvalidArgument,
  NotStable,
  SqrtNotRepresentable,
  NotStable2Form,
  NotStable3Form,
  NotCompatible,
  ZeroLength,
  DegenerateMetric,
  SymmetryViolation,
  NotG1,
  NearSingular,
  NullCaseDegenerate,
  UnknownName,
  SyntaxError,
  ValidationError,
  UsageError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace nk6
