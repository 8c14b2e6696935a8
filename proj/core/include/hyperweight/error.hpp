#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperweight {

enum class ErrorCode {
  kNotPrimePower,
  kCapExceeded,
  kZeroInverse,
  kDimensionMismatch,
  kFieldMismatch,
  kZeroPolynomial,
  kBadDegree,
  kLinearlyDependent,
  kZeroInput,
  kNotHomogeneousSquareFree,
  kRegionViolation,
  kSizeCap,
  kDegenerateField,
  kInconsistent,
  kBudgetExceeded,
  kOutOfGrid,
  kBadParameters,
  kInternalInconsistency,
  kOverflow,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Single exception type for the library; callers switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when an enumeration would exceed its budget. `required` is the
// number of work items the request needs (saturated at UINT64_MAX).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget, const std::string& what)
      : Error(ErrorCode::kBudgetExceeded,
              what + " (required " + std::to_string(required) + ", budget " +
                  std::to_string(budget) + ")"),
        required_(required),
        budget_(budget) {}

  std::uint64_t required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

}  // namespace hyperweight
