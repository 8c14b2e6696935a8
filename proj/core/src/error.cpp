#include "hyperweight/error.hpp"

namespace hyperweight {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPrimePower: return "NotPrimePower";
    case ErrorCode::kCapExceeded: return "CapExceeded";
    case ErrorCode::kZeroInverse: return "ZeroInverse";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kFieldMismatch: return "FieldMismatch";
    case ErrorCode::kZeroPolynomial: return "ZeroPolynomial";
    case ErrorCode::kBadDegree: return "BadDegree";
    case ErrorCode::kLinearlyDependent: return "LinearlyDependent";
    case ErrorCode::kZeroInput: return "ZeroInput";
    case ErrorCode::kNotHomogeneousSquareFree: return "NotHomogeneousSquareFree";
    case ErrorCode::kRegionViolation: return "RegionViolation";
    case ErrorCode::kSizeCap: return "SizeCap";
    case ErrorCode::kDegenerateField: return "DegenerateField";
    case ErrorCode::kInconsistent: return "Inconsistent";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kOutOfGrid: return "OutOfGrid";
    case ErrorCode::kBadParameters: return "BadParameters";
    case ErrorCode::kInternalInconsistency: return "InternalInconsistency";
    case ErrorCode::kOverflow: return "Overflow";
    case ErrorCode::kParse: return "Parse";
  }
  return "Unknown";
}

}  // namespace hyperweight
