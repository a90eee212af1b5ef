#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace glmn {

enum class ErrorCode {
  CompositeP,
  PTooSmall,
  NonIrreducibleModulus,
  FieldTooLarge,
  FieldMismatch,
  BadDims,
  OddInput,
  OddReflectionOnWeight,
  InvalidSupport,
  MixedParity,
  NotWeightZero,
  ChiNotBorelCompatible,
  LambdaNotInX,
  NonScalarResult,
  NotG0Module,
  EigenvaluesOutsideField,
  NotMaximal,
  IntertwinerCheckFailed,
  ZeroVector,
  NoMaximalVector,
  NotClosed,
  DimensionBudgetExceeded,
  NotNormalized,
  ClosureFailure,
  OrderingStuck,
  FormulaMismatch,
  NotStandardLevi,
  SingularG,
  NotNormalizable,
  ParseError,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace glmn
