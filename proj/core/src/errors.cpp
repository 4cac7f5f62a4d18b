#include "wlink/errors.hpp"

namespace wlink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NonCoprimeWeights: return "NonCoprimeWeights";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::DimensionUnsupported: return "DimensionUnsupported";
    case ErrorCode::MissingQuadraticPart: return "MissingQuadraticPart";
    case ErrorCode::NonIntegralMilnorNumber: return "NonIntegralMilnorNumber";
    case ErrorCode::NonIntegralDivisor: return "NonIntegralDivisor";
    case ErrorCode::DegenerateFactor: return "DegenerateFactor";
    case ErrorCode::NotAPolynomial: return "NotAPolynomial";
    case ErrorCode::ContainsSingularLine: return "ContainsSingularLine";
    case ErrorCode::InfeasibleSystem: return "InfeasibleSystem";
    case ErrorCode::NegativeModuliDimension: return "NegativeModuliDimension";
    case ErrorCode::RemainderNonZero: return "RemainderNonZero";
  }
  return "Unknown";
}

ErrorClass error_class(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidInput:
    case ErrorCode::NonPositiveWeight:
    case ErrorCode::NonCoprimeWeights:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::DimensionUnsupported:
    case ErrorCode::MissingQuadraticPart:
      return ErrorClass::Validation;
    case ErrorCode::NonIntegralMilnorNumber:
    case ErrorCode::NonIntegralDivisor:
    case ErrorCode::DegenerateFactor:
    case ErrorCode::NotAPolynomial:
    case ErrorCode::ContainsSingularLine:
    case ErrorCode::InfeasibleSystem:
    case ErrorCode::NegativeModuliDimension:
      return ErrorClass::Inadmissible;
    case ErrorCode::RemainderNonZero:
      return ErrorClass::Internal;
  }
  return ErrorClass::Internal;
}

namespace {

std::string compose(ErrorCode code, const std::string& operation,
                    const std::string& detail) {
  std::string msg(to_string(code));
  msg += " in ";
  msg += operation;
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}

}  // namespace

Error::Error(ErrorCode code, std::string operation, std::string detail)
    : std::runtime_error(compose(code, operation, detail)),
      code_(code),
      operation_(std::move(operation)),
      detail_(std::move(detail)) {}

}  // namespace wlink
