#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hopfkit {

/// Failure categories raised by the library. Each maps onto one named error
/// condition of the public operations; callers switch on the code, the
/// message carries the human-readable detail.
enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ReducibleModulus,
  DescriptorMismatch,
  NotAUnit,
  NotDivisible,
  SingularModP,
  Inconsistent,
  ArityMismatch,
  NotAGroup,
  SingularAntipode,
  InternalAxiomFailure,
  OrderNotFound,
  FieldTooLargeForRootSearch,
  NotSemisimple,
  NotSplit,
  NotACocycle,
  BudgetExceeded,
  NotSemisimpleOrCosemisimple,
  CoboundaryUnsolvable,
  PostAxiomFailure,
  RightAntipodeFailure,
  DifferentBaseOrPrecision,
  CocycleUnsolvable,
  UnitCompatibilityFailure,
  TriangularityLost,
  ThetaNotHopfMap,
  NotRealAtRoot,
  NonConstantProduct,
  DimensionTooSmall,
  SchemaViolation,
  Unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hopfkit
