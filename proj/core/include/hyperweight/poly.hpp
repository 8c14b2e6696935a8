#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "hyperweight/gf.hpp"

namespace hyperweight {

/// Exponent vector (a_1, ..., a_s) of the monomial t_1^{a_1} ... t_s^{a_s}.
/// Index 0 holds the exponent of t_1.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<std::uint32_t> exps);
  ExponentVector(std::initializer_list<std::uint32_t> exps)
      : ExponentVector(std::vector<std::uint32_t>(exps)) {}
  static ExponentVector zeros(unsigned s) { return ExponentVector(std::vector<std::uint32_t>(s, 0)); }

  unsigned size() const { return static_cast<unsigned>(exps_.size()); }
  unsigned degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<std::uint32_t>& exps() const { return exps_; }
  bool is_square_free() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  unsigned degree_ = 0;
};

/// Graded lexicographic order with t_1 > t_2 > ... > t_s: total degree
/// first, then the first differing exponent decides.
std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b);

struct GrlexDescending {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return grlex_compare(a, b) == std::strong_ordering::greater;
  }
};

/// Sparse polynomial in s variables over a fixed field. Terms iterate in
/// grlex-descending order and never hold a zero coefficient.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, FieldElement, GrlexDescending>;

  Polynomial(FieldPtr field, unsigned s);

  static Polynomial constant(FieldPtr field, unsigned s, FieldElement c);
  static Polynomial monomial(FieldPtr field, const ExponentVector& a, FieldElement c);
  /// The variable t_i, with 1 <= i <= s.
  static Polynomial variable(FieldPtr field, unsigned s, unsigned i);

  unsigned num_vars() const { return s_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  /// Total degree; 0 for constants and for the zero polynomial.
  unsigned degree() const;
  bool is_homogeneous() const;

  /// Adds c * t^a, dropping the term if the coefficient cancels.
  void add_term(const ExponentVector& a, FieldElement c);

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial scaled(FieldElement c) const;

  FieldElement evaluate(std::span<const FieldElement> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  void check_compatible(const Polynomial& other) const;

  FieldPtr field_;
  unsigned s_;
  Terms terms_;
};

struct LeadingTerm {
  ExponentVector monomial;
  FieldElement coeff;
};

/// LM and LC under grlex; throws kZeroPolynomial on 0.
LeadingTerm leading_monomial(const Polynomial& f);

bool is_square_free(const Polynomial& f);

/// Lattice points of the d-th hypersimplex: 0/1 vectors with d ones, grlex-descending.
std::vector<ExponentVector> hypersimplex_monomials(unsigned s, unsigned d);

/// Square-free exponent vectors of degree <= d, grlex-descending (constant last).
std::vector<ExponentVector> squarefree_monomials_upto(unsigned s, unsigned d);

/// Row-reduces a linearly independent family to one with pairwise distinct
/// leading monomials, the same span and hence the same common zeros.
/// Output i satisfies LM(g_i) <= LM(f_i).
std::vector<Polynomial> distinct_lm_reduce(const std::vector<Polynomial>& polys);

/// t_1...t_s f(1/t_1, ..., 1/t_s) for homogeneous square-free f: every
/// exponent vector is replaced by its complement.
Polynomial star_transform(const Polynomial& f);

/// Explicit polynomial families that realize the large common-zero sets
/// behind the closed-form weight values.
enum class ExtremalFamily {
  kLowDegree,        // 2d + r - 2 < s
  kHighDegree,       // s < 2d - r + 2
  kShiftedAffine,    // d + r - 2 < s, degree <= d code
  kPairHalf,         // s = 2d, r = 2
  kTripleHalfPlusOne,  // s = 2d + 1, r = 3
  kTripleHalf,       // s = 2d, r = 3
  kTripleHalfMinusOne,  // s = 2d - 1, r = 3
};

std::string_view extremal_family_name(ExtremalFamily kind);
ExtremalFamily parse_extremal_family(std::string_view name);

/// Builds the r polynomials of the given family, expanded to sparse form.
/// Throws kRegionViolation naming the failed inequality. r = 0 yields an
/// empty list.
std::vector<Polynomial> extremal_family(ExtremalFamily kind, const FieldPtr& field, unsigned s, unsigned d,
                                        unsigned r);

}  // namespace hyperweight
