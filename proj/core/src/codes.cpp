#include "hyperweight/codes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "hyperweight/bounds.hpp"
#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"

namespace hyperweight {

std::string_view code_family_name(CodeFamily family) {
  switch (family) {
    case CodeFamily::kAffine: return "affine";
    case CodeFamily::kProjective: return "projective";
    case CodeFamily::kSquarefreeLeq: return "sfleq";
    case CodeFamily::kDeltaPrime: return "delta-prime";
    case CodeFamily::kProjectiveDual: return "proj-dual";
  }
  return "unknown";
}

CodeFamily parse_code_family(std::string_view name) {
  for (auto f : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq, CodeFamily::kDeltaPrime,
                 CodeFamily::kProjectiveDual}) {
    if (code_family_name(f) == name) return f;
  }
  throw Error(ErrorCode::kBadParameters, "unknown code family '" + std::string(name) + "'");
}

LinearCode::LinearCode(FieldPtr field, const Matrix& rows, CodeMeta meta) : field_(std::move(field)), meta_(meta) {
  RrefResult red = rref(rows, *field_);
  generator_ = red.matrix.top_rows(red.rank);
  pivots_ = std::move(red.pivots);
}

ExponentVector hat(const ExponentVector& b, std::uint32_t q) {
  std::vector<std::uint32_t> out(b.size());
  for (unsigned i = 0; i < b.size(); ++i) {
    if (b[i] > q - 2) {
      throw Error(ErrorCode::kOutOfGrid, "exponent " + std::to_string(b[i]) + " outside 0.." + std::to_string(q - 2));
    }
    out[i] = b[i] == 0 ? 0 : q - 1 - b[i];
  }
  return ExponentVector(std::move(out));
}

namespace {

void require_nondegenerate(const Field& field) {
  if (field.q() == 2) throw Error(ErrorCode::kDegenerateField, "q = 2 collapses the exponent grid to one point");
}

void check_shape(unsigned s, unsigned d) {
  if (s < 2) throw Error(ErrorCode::kBadParameters, "codes need s >= 2, got " + std::to_string(s));
  if (d < 1 || d > s) {
    throw Error(ErrorCode::kBadDegree, "degree " + std::to_string(d) + " outside 1.." + std::to_string(s));
  }
}

// All of {0, ..., q-2}^s except `removed`, grlex-descending.
std::vector<ExponentVector> grid_minus(std::uint32_t q, unsigned s, const std::set<std::vector<std::uint32_t>>& removed) {
  std::vector<ExponentVector> out;
  std::vector<std::uint32_t> tuple(s, 0);
  const std::uint64_t count = saturating_pow(q - 1, s);
  for (std::uint64_t i = 0; i < count; ++i) {
    if (!removed.contains(tuple)) out.emplace_back(tuple);
    for (unsigned j = s; j-- > 0;) {
      if (++tuple[j] < q - 1) break;
      tuple[j] = 0;
    }
  }
  std::sort(out.begin(), out.end(), GrlexDescending{});
  return out;
}

CodeMeta make_meta(CodeFamily family, const Field& field, unsigned s, unsigned d) {
  return {family, field.q(), s, d, dimension_formula(family, field.q(), s, d)};
}

}  // namespace

MonomialSet hat_complement(const Field& field, unsigned s, unsigned d) {
  require_nondegenerate(field);
  check_shape(s, d);
  std::set<std::vector<std::uint32_t>> image;
  for (const auto& b : hypersimplex_monomials(s, d)) image.insert(hat(b, field.q()).exps());
  return {s, grid_minus(field.q(), s, image)};
}

Matrix evaluation_matrix(const std::vector<ExponentVector>& monomials, const PointSet& pts) {
  Matrix out(monomials.size(), pts.size());
  for (std::size_t r = 0; r < monomials.size(); ++r) {
    const auto row = evaluate(Polynomial::monomial(pts.field_ptr(), monomials[r], pts.field().one()), pts);
    std::copy(row.begin(), row.end(), out.row(r).begin());
  }
  return out;
}

LinearCode build_affine_toric(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  check_shape(s, d);
  const PointSet pts = enumerate_affine_torus(field, s, cap);
  return {field, evaluation_matrix(hypersimplex_monomials(s, d), pts), make_meta(CodeFamily::kAffine, *field, s, d)};
}

LinearCode build_projective_toric(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  check_shape(s, d);
  const PointSet pts = enumerate_projective_torus(field, s, cap);
  return {field, evaluation_matrix(hypersimplex_monomials(s, d), pts),
          make_meta(CodeFamily::kProjective, *field, s, d)};
}

LinearCode build_squarefree_leq(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  check_shape(s, d);
  const PointSet pts = enumerate_affine_torus(field, s, cap);
  return {field, evaluation_matrix(squarefree_monomials_upto(s, d), pts),
          make_meta(CodeFamily::kSquarefreeLeq, *field, s, d)};
}

LinearCode build_delta_prime_code(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  require_nondegenerate(*field);
  check_shape(s, d);
  const PointSet pts = enumerate_affine_torus(field, s, cap);
  const MonomialSet delta_prime = hat_complement(*field, s, d);
  return {field, evaluation_matrix(delta_prime.members, pts), make_meta(CodeFamily::kDeltaPrime, *field, s, d)};
}

LinearCode build_projective_dual_code(const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  require_nondegenerate(*field);
  check_shape(s, d);
  std::set<std::vector<std::uint32_t>> h1;
  for (const auto& b : hypersimplex_monomials(s, d)) h1.emplace(b.exps().begin() + 1, b.exps().end());
  std::set<std::vector<std::uint32_t>> h2;
  for (const auto& b : h1) h2.insert(hat(ExponentVector(b), field->q()).exps());
  if (h2.size() < h1.size()) {
    throw Error(ErrorCode::kInconsistent, "hat map collides: " + std::to_string(h1.size()) + " truncated vectors, " +
                                              std::to_string(h2.size()) + " images");
  }
  const PointSet pts = enumerate_affine_torus(field, s - 1, cap);
  return {field, evaluation_matrix(grid_minus(field->q(), s - 1, h2), pts),
          make_meta(CodeFamily::kProjectiveDual, *field, s, d)};
}

LinearCode build_code(CodeFamily family, const FieldPtr& field, unsigned s, unsigned d, std::uint64_t cap) {
  switch (family) {
    case CodeFamily::kAffine: return build_affine_toric(field, s, d, cap);
    case CodeFamily::kProjective: return build_projective_toric(field, s, d, cap);
    case CodeFamily::kSquarefreeLeq: return build_squarefree_leq(field, s, d, cap);
    case CodeFamily::kDeltaPrime: return build_delta_prime_code(field, s, d, cap);
    case CodeFamily::kProjectiveDual: return build_projective_dual_code(field, s, d, cap);
  }
  throw Error(ErrorCode::kBadParameters, "unknown code family");
}

std::string generator_csv(const LinearCode& code) {
  std::string out;
  for (std::size_t r = 0; r < code.k(); ++r) {
    for (std::size_t c = 0; c < code.n(); ++c) {
      if (c > 0) out += ',';
      out += std::to_string(code.generator()(r, c).rep);
    }
    out += '\n';
  }
  return out;
}

}  // namespace hyperweight
