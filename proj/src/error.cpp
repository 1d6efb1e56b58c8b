#include "hopfkit/error.hpp"

namespace hopfkit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ReducibleModulus: return "ReducibleModulus";
    case ErrorCode::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorCode::NotAUnit: return "NotAUnit";
    case ErrorCode::NotDivisible: return "NotDivisible";
    case ErrorCode::SingularModP: return "SingularModP";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::NotAGroup: return "NotAGroup";
    case ErrorCode::SingularAntipode: return "SingularAntipode";
    case ErrorCode::InternalAxiomFailure: return "InternalAxiomFailure";
    case ErrorCode::OrderNotFound: return "OrderNotFound";
    case ErrorCode::FieldTooLargeForRootSearch: return "FieldTooLargeForRootSearch";
    case ErrorCode::NotSemisimple: return "NotSemisimple";
    case ErrorCode::NotSplit: return "NotSplit";
    case ErrorCode::NotACocycle: return "NotACocycle";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::NotSemisimpleOrCosemisimple: return "NotSemisimpleOrCosemisimple";
    case ErrorCode::CoboundaryUnsolvable: return "CoboundaryUnsolvable";
    case ErrorCode::PostAxiomFailure: return "PostAxiomFailure";
    case ErrorCode::RightAntipodeFailure: return "RightAntipodeFailure";
    case ErrorCode::DifferentBaseOrPrecision: return "DifferentBaseOrPrecision";
    case ErrorCode::CocycleUnsolvable: return "CocycleUnsolvable";
    case ErrorCode::UnitCompatibilityFailure: return "UnitCompatibilityFailure";
    case ErrorCode::TriangularityLost: return "TriangularityLost";
    case ErrorCode::ThetaNotHopfMap: return "ThetaNotHopfMap";
    case ErrorCode::NotRealAtRoot: return "NotRealAtRoot";
    case ErrorCode::NonConstantProduct: return "NonConstantProduct";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

}  // namespace hopfkit
