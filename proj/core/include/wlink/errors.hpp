#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wlink {

enum class ErrorCode {
  InvalidInput,
  NonPositiveWeight,
  NonCoprimeWeights,
  DegreeMismatch,
  DimensionUnsupported,
  MissingQuadraticPart,
  NonIntegralMilnorNumber,
  NonIntegralDivisor,
  DegenerateFactor,
  NotAPolynomial,
  ContainsSingularLine,
  InfeasibleSystem,
  NegativeModuliDimension,
  RemainderNonZero,
};

/// Coarse grouping used for process exit codes.
enum class ErrorClass {
  Validation,    // malformed or out-of-contract input
  Inadmissible,  // well-formed input with no mathematical meaning
  Internal,      // a consistency check that should be unreachable
};

std::string_view to_string(ErrorCode code);
ErrorClass error_class(ErrorCode code);

/// Every failure carries the operation that raised it and the offending value.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string operation, std::string detail);

  ErrorCode code() const noexcept { return code_; }
  const std::string& operation() const noexcept { return operation_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string operation_;
  std::string detail_;
};

}  // namespace wlink
