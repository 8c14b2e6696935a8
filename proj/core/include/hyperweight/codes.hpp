#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hyperweight/gf.hpp"
#include "hyperweight/linalg.hpp"
#include "hyperweight/poly.hpp"
#include "hyperweight/torus.hpp"

namespace hyperweight {

enum class CodeFamily {
  kAffine,          // C_d on (F_q^*)^s
  kProjective,      // C_d^P on {1} x (F_q^*)^{s-1}
  kSquarefreeLeq,   // C_{<=d} on (F_q^*)^s
  kDeltaPrime,      // dual of C_d as an evaluation code
  kProjectiveDual,  // dual of C_d^P as an evaluation code in s-1 variables
};

/// CLI spellings: affine, projective, sfleq, delta-prime, proj-dual.
std::string_view code_family_name(CodeFamily family);
CodeFamily parse_code_family(std::string_view name);

struct CodeMeta {
  CodeFamily family = CodeFamily::kAffine;
  std::uint32_t q = 0;
  unsigned s = 0;
  unsigned d = 0;
  std::uint64_t expected_k = 0;  // closed-form dimension
};

/// A linear code stored by its RREF generator, so two codes are equal
/// exactly when their generators are equal.
class LinearCode {
 public:
  /// Row-reduces `rows` and keeps the nonzero part.
  LinearCode(FieldPtr field, const Matrix& rows, CodeMeta meta);

  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t n() const { return generator_.cols(); }
  std::size_t k() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const CodeMeta& meta() const { return meta_; }
  bool rank_defect() const { return k() != meta_.expected_k; }

 private:
  FieldPtr field_;
  Matrix generator_;
  std::vector<std::size_t> pivots_;
  CodeMeta meta_;
};

/// Exponent vectors with entries in {0, ..., q-2}, grlex-descending.
struct MonomialSet {
  unsigned s = 0;
  std::vector<ExponentVector> members;

  std::size_t size() const { return members.size(); }
};

/// Componentwise b -> q-1-b, fixing 0.
ExponentVector hat(const ExponentVector& b, std::uint32_t q);

/// The full grid {0, ..., q-2}^s minus the hat image of the hypersimplex
/// points. Throws kDegenerateField for q = 2.
MonomialSet hat_complement(const Field& field, unsigned s, unsigned d);

/// Evaluation vectors of the given monomials, one row each, in input order.
Matrix evaluation_matrix(const std::vector<ExponentVector>& monomials, const PointSet& pts);

LinearCode build_affine_toric(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap = kDefaultPointCap);
LinearCode build_projective_toric(const FieldPtr& field, unsigned s, unsigned d,
                                  std::uint64_t cap = kDefaultPointCap);
LinearCode build_squarefree_leq(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap = kDefaultPointCap);
LinearCode build_delta_prime_code(const FieldPtr& field, unsigned s, unsigned d,
                                  std::uint64_t cap = kDefaultPointCap);
/// Evaluated on (F_q^*)^{s-1}, whose i-th point R_i matches the projective
/// point (1, R_i). A rank below the closed form is reported via rank_defect().
/// Throws kInconsistent if the hat map collides on the truncated vectors.
LinearCode build_projective_dual_code(const FieldPtr& field, unsigned s, unsigned d,
                                      std::uint64_t cap = kDefaultPointCap);

LinearCode build_code(CodeFamily family, const FieldPtr& field, unsigned s, unsigned d,
                      std::uint64_t cap = kDefaultPointCap);

/// One line per generator row, comma-separated reps, no header.
std::string generator_csv(const LinearCode& code);

}  // namespace hyperweight
