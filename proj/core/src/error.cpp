#include "glmn/error.hpp"

namespace glmn {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::CompositeP: return "CompositeP";
    case ErrorCode::PTooSmall: return "PTooSmall";
    case ErrorCode::NonIrreducibleModulus: return "NonIrreducibleModulus";
    case ErrorCode::FieldTooLarge: return "FieldTooLarge";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::BadDims: return "BadDims";
    case ErrorCode::OddInput: return "OddInput";
    case ErrorCode::OddReflectionOnWeight: return "OddReflectionOnWeight";
    case ErrorCode::InvalidSupport: return "InvalidSupport";
    case ErrorCode::MixedParity: return "MixedParity";
    case ErrorCode::NotWeightZero: return "NotWeightZero";
    case ErrorCode::ChiNotBorelCompatible: return "ChiNotBorelCompatible";
    case ErrorCode::LambdaNotInX: return "LambdaNotInX";
    case ErrorCode::NonScalarResult: return "NonScalarResult";
    case ErrorCode::NotG0Module: return "NotG0Module";
    case ErrorCode::EigenvaluesOutsideField: return "EigenvaluesOutsideField";
    case ErrorCode::NotMaximal: return "NotMaximal";
    case ErrorCode::IntertwinerCheckFailed: return "IntertwinerCheckFailed";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::NoMaximalVector: return "NoMaximalVector";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::DimensionBudgetExceeded: return "DimensionBudgetExceeded";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::ClosureFailure: return "ClosureFailure";
    case ErrorCode::OrderingStuck: return "OrderingStuck";
    case ErrorCode::FormulaMismatch: return "FormulaMismatch";
    case ErrorCode::NotStandardLevi: return "NotStandardLevi";
    case ErrorCode::SingularG: return "SingularG";
    case ErrorCode::NotNormalizable: return "NotNormalizable";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace glmn
