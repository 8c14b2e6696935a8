#include "hyperweight/poly.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"
#include "hyperweight/linalg.hpp"

namespace hyperweight {

ExponentVector::ExponentVector(std::vector<std::uint32_t> exps)
    : exps_(std::move(exps)), degree_(std::accumulate(exps_.begin(), exps_.end(), 0u)) {}

bool ExponentVector::is_square_free() const {
  return std::all_of(exps_.begin(), exps_.end(), [](std::uint32_t a) { return a <= 1; });
}

std::strong_ordering grlex_compare(const ExponentVector& a, const ExponentVector& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "comparing exponent vectors of length " + std::to_string(a.size()) + " and " +
                    std::to_string(b.size()));
  }
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (unsigned i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

Polynomial::Polynomial(FieldPtr field, unsigned s) : field_(std::move(field)), s_(s) {}

Polynomial Polynomial::constant(FieldPtr field, unsigned s, FieldElement c) {
  Polynomial out(std::move(field), s);
  out.add_term(ExponentVector::zeros(s), c);
  return out;
}

Polynomial Polynomial::monomial(FieldPtr field, const ExponentVector& a, FieldElement c) {
  Polynomial out(std::move(field), a.size());
  out.add_term(a, c);
  return out;
}

Polynomial Polynomial::variable(FieldPtr field, unsigned s, unsigned i) {
  if (i < 1 || i > s) {
    throw Error(ErrorCode::kDimensionMismatch,
                "variable t_" + std::to_string(i) + " outside 1.." + std::to_string(s));
  }
  std::vector<std::uint32_t> exps(s, 0);
  exps[i - 1] = 1;
  const FieldElement one = field->one();
  return monomial(std::move(field), ExponentVector(std::move(exps)), one);
}

unsigned Polynomial::degree() const {
  // Terms are grlex-descending, so the first term has maximal degree.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const unsigned d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const ExponentVector& a, FieldElement c) {
  if (a.size() != s_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "term with " + std::to_string(a.size()) + " exponents in a " + std::to_string(s_) +
                    "-variable polynomial");
  }
  if (c.rep >= field_->q()) {
    throw Error(ErrorCode::kFieldMismatch, "coefficient rep " + std::to_string(c.rep) + " outside F_" +
                                               std::to_string(field_->q()));
  }
  if (c.rep == 0) return;
  auto [it, inserted] = terms_.try_emplace(a, c);
  if (inserted) return;
  it->second = field_->add(it->second, c);
  if (it->second.rep == 0) terms_.erase(it);
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (s_ != other.s_) throw Error(ErrorCode::kDimensionMismatch, "polynomials in different variable counts");
  require_same_field(*field_, *other.field_);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [a, c] : other.terms_) out.add_term(a, c);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out = *this;
  for (const auto& [a, c] : other.terms_) out.add_term(a, field_->neg(c));
  return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  check_compatible(other);
  Polynomial out(field_, s_);
  std::vector<std::uint32_t> buf(s_);
  for (const auto& [a, c] : terms_) {
    for (const auto& [b, e] : other.terms_) {
      for (unsigned i = 0; i < s_; ++i) buf[i] = a[i] + b[i];
      out.add_term(ExponentVector(buf), field_->mul(c, e));
    }
  }
  return out;
}

Polynomial Polynomial::scaled(FieldElement c) const {
  Polynomial out(field_, s_);
  if (c.rep == 0) return out;
  for (const auto& [a, v] : terms_) out.terms_.emplace(a, field_->mul(v, c));
  return out;
}

FieldElement Polynomial::evaluate(std::span<const FieldElement> point) const {
  if (point.size() != s_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "point of dimension " + std::to_string(point.size()) + " for " + std::to_string(s_) + " variables");
  }
  const Field& f = *field_;
  FieldElement acc = f.zero();
  for (const auto& [a, c] : terms_) {
    FieldElement v = c;
    for (unsigned i = 0; i < s_ && v.rep != 0; ++i) {
      if (a[i] != 0) v = f.mul(v, f.pow(point[i], a[i]));
    }
    acc = f.add(acc, v);
  }
  return acc;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.s_ != b.s_ || !(*a.field_ == *b.field_)) return false;
  return a.terms_ == b.terms_;
}

LeadingTerm leading_monomial(const Polynomial& f) {
  if (f.is_zero()) throw Error(ErrorCode::kZeroPolynomial, "the zero polynomial has no leading monomial");
  const auto& [a, c] = *f.terms().begin();
  return {a, c};
}

bool is_square_free(const Polynomial& f) {
  return std::all_of(f.terms().begin(), f.terms().end(), [](const auto& t) { return t.first.is_square_free(); });
}

namespace {

void check_degree_range(unsigned s, unsigned d, unsigned lo) {
  if (d < lo || d > s) {
    throw Error(ErrorCode::kBadDegree, "degree " + std::to_string(d) + " outside " + std::to_string(lo) + ".." +
                                           std::to_string(s));
  }
}

std::vector<ExponentVector> squarefree_of_degree(unsigned s, unsigned d) {
  // Walk d-subsets of {0..s-1} in lexicographic order; with t_1 most
  // significant this is already grlex-descending.
  std::vector<ExponentVector> out;
  std::vector<unsigned> idx(d);
  std::iota(idx.begin(), idx.end(), 0u);
  while (true) {
    std::vector<std::uint32_t> exps(s, 0);
    for (unsigned i : idx) exps[i] = 1;
    out.emplace_back(std::move(exps));
    int i = static_cast<int>(d) - 1;
    while (i >= 0 && idx[i] == s - d + static_cast<unsigned>(i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (unsigned j = static_cast<unsigned>(i) + 1; j < d; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

// Union of all monomials in the family, grlex-descending, and the
// coefficient matrix with one row per polynomial.
struct CoefficientMatrix {
  std::vector<ExponentVector> columns;
  Matrix matrix;
};

CoefficientMatrix coefficient_matrix(const std::vector<Polynomial>& polys) {
  std::map<ExponentVector, std::size_t, GrlexDescending> index;
  for (const auto& f : polys) {
    for (const auto& [a, c] : f.terms()) index.try_emplace(a, 0);
  }
  CoefficientMatrix out;
  out.columns.reserve(index.size());
  for (auto& [a, pos] : index) {
    pos = out.columns.size();
    out.columns.push_back(a);
  }
  out.matrix = Matrix(polys.size(), out.columns.size());
  for (std::size_t r = 0; r < polys.size(); ++r) {
    for (const auto& [a, c] : polys[r].terms()) out.matrix(r, index.at(a)) = c;
  }
  return out;
}

}  // namespace

std::vector<ExponentVector> hypersimplex_monomials(unsigned s, unsigned d) {
  check_degree_range(s, d, 1);
  return squarefree_of_degree(s, d);
}

std::vector<ExponentVector> squarefree_monomials_upto(unsigned s, unsigned d) {
  check_degree_range(s, d, 0);
  std::vector<ExponentVector> out;
  for (unsigned deg = d + 1; deg-- > 1;) {
    auto layer = squarefree_of_degree(s, deg);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  out.push_back(ExponentVector::zeros(s));
  return out;
}

std::vector<Polynomial> distinct_lm_reduce(const std::vector<Polynomial>& polys) {
  if (polys.empty()) return {};
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].is_zero()) throw Error(ErrorCode::kZeroInput, "input " + std::to_string(i) + " is zero");
    if (i > 0 && (polys[i].num_vars() != polys[0].num_vars())) {
      throw Error(ErrorCode::kDimensionMismatch, "inputs in different variable counts");
    }
    if (i > 0) require_same_field(polys[i].field(), polys[0].field());
  }
  const Field& field = polys.front().field();
  const CoefficientMatrix cm = coefficient_matrix(polys);
  const RrefResult red = rref(cm.matrix, field);
  if (red.rank < polys.size()) {
    throw Error(ErrorCode::kLinearlyDependent, "family of " + std::to_string(polys.size()) + " has rank " +
                                                   std::to_string(red.rank));
  }

  // Reduced rows have strictly decreasing leading monomials. Hand the i-th
  // largest to the input with the i-th largest LM; the span argument gives
  // LM(g) <= LM(f) for that pairing.
  std::vector<std::size_t> order(polys.size());
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return GrlexDescending{}(leading_monomial(polys[a]).monomial, leading_monomial(polys[b]).monomial);
  });

  std::vector<Polynomial> out(polys.size(), Polynomial(polys.front().field_ptr(), polys.front().num_vars()));
  for (std::size_t i = 0; i < polys.size(); ++i) {
    Polynomial g(polys.front().field_ptr(), polys.front().num_vars());
    for (std::size_t c = 0; c < cm.columns.size(); ++c) g.add_term(cm.columns[c], red.matrix(i, c));
    out[order[i]] = std::move(g);
  }
  return out;
}

Polynomial star_transform(const Polynomial& f) {
  if (!is_square_free(f) || !f.is_homogeneous()) {
    throw Error(ErrorCode::kNotHomogeneousSquareFree, "star transform needs a homogeneous square-free polynomial");
  }
  const unsigned s = f.num_vars();
  Polynomial out(f.field_ptr(), s);
  std::vector<std::uint32_t> buf(s);
  for (const auto& [a, c] : f.terms()) {
    for (unsigned i = 0; i < s; ++i) buf[i] = 1 - a[i];
    out.add_term(ExponentVector(buf), c);
  }
  return out;
}

std::string_view extremal_family_name(ExtremalFamily kind) {
  switch (kind) {
    case ExtremalFamily::kLowDegree: return "low-degree";
    case ExtremalFamily::kHighDegree: return "high-degree";
    case ExtremalFamily::kShiftedAffine: return "shifted-affine";
    case ExtremalFamily::kPairHalf: return "pair-half";
    case ExtremalFamily::kTripleHalfPlusOne: return "triple-half-plus-one";
    case ExtremalFamily::kTripleHalf: return "triple-half";
    case ExtremalFamily::kTripleHalfMinusOne: return "triple-half-minus-one";
  }
  return "unknown";
}

ExtremalFamily parse_extremal_family(std::string_view name) {
  for (auto kind : {ExtremalFamily::kLowDegree, ExtremalFamily::kHighDegree, ExtremalFamily::kShiftedAffine,
                    ExtremalFamily::kPairHalf, ExtremalFamily::kTripleHalfPlusOne, ExtremalFamily::kTripleHalf,
                    ExtremalFamily::kTripleHalfMinusOne}) {
    if (extremal_family_name(kind) == name) return kind;
  }
  throw Error(ErrorCode::kBadParameters, "unknown extremal family '" + std::string(name) + "'");
}

namespace {

// Builders indexed like the math: t(i) is t_i with 1 <= i <= s.
class FamilyBuilder {
 public:
  FamilyBuilder(FieldPtr field, unsigned s) : field_(std::move(field)), s_(s) {}

  Polynomial one() const { return Polynomial::constant(field_, s_, field_->one()); }
  Polynomial t(unsigned i) const { return Polynomial::variable(field_, s_, i); }
  Polynomial diff(unsigned i, unsigned j) const { return t(i) - t(j); }
  Polynomial minus_one(unsigned i) const { return t(i) - one(); }

  // (t_1 - t_2)(t_3 - t_4)...(t_{2m-1} - t_{2m})
  Polynomial paired_differences(unsigned m) const {
    Polynomial out = one();
    for (unsigned j = 1; j <= m; ++j) out = out * diff(2 * j - 1, 2 * j);
    return out;
  }

 private:
  FieldPtr field_;
  unsigned s_;
};

[[noreturn]] void region_violation(std::string_view family, const std::string& inequality, unsigned s, unsigned d,
                                   unsigned r) {
  throw Error(ErrorCode::kRegionViolation, std::string(family) + " family needs " + inequality + " (s=" +
                                               std::to_string(s) + ", d=" + std::to_string(d) +
                                               ", r=" + std::to_string(r) + ")");
}

}  // namespace

std::vector<Polynomial> extremal_family(ExtremalFamily kind, const FieldPtr& field, unsigned s, unsigned d,
                                        unsigned r) {
  if (r == 0) return {};
  const std::string_view name = extremal_family_name(kind);
  if (s < 2) region_violation(name, "s >= 2", s, d, r);
  if (d < 1 || d > s) region_violation(name, "1 <= d <= s", s, d, r);
  const FamilyBuilder b(field, s);
  std::vector<Polynomial> out;

  switch (kind) {
    case ExtremalFamily::kLowDegree: {
      if (!(2 * d + r - 2 < s)) region_violation(name, "2d+r-2 < s", s, d, r);
      const Polynomial g = b.paired_differences(d - 1);
      for (unsigned i = 1; i <= r; ++i) out.push_back(g * b.diff(2 * d + i - 2, 2 * d + i - 1));
      break;
    }
    case ExtremalFamily::kHighDegree: {
      if (!(d < s)) region_violation(name, "d < s", s, d, r);
      if (!(s + r < 2 * d + 2)) region_violation(name, "s < 2d-r+2", s, d, r);
      const unsigned v = s - d;
      const Polynomial g = b.paired_differences(v - 1);
      for (unsigned i = 1; i <= r; ++i) {
        const unsigned lo = 2 * v + i - 2;
        Polynomial f = g * b.diff(lo, lo + 1);
        for (unsigned j = 2 * v - 1; j <= s; ++j) {
          if (j != lo && j != lo + 1) f = f * b.t(j);
        }
        out.push_back(std::move(f));
      }
      break;
    }
    case ExtremalFamily::kShiftedAffine: {
      if (!(d + r < s + 2)) region_violation(name, "d+r-2 < s", s, d, r);
      Polynomial g = b.one();
      for (unsigned j = 1; j + 1 <= d; ++j) g = g * b.minus_one(j);
      for (unsigned i = 1; i <= r; ++i) out.push_back(g * b.minus_one(d + i - 1));
      break;
    }
    case ExtremalFamily::kPairHalf: {
      if (s != 2 * d) region_violation(name, "s = 2d", s, d, r);
      if (r != 2) region_violation(name, "r = 2", s, d, r);
      const Polynomial g = b.paired_differences(d - 1);
      out.push_back(g * b.diff(2 * d - 1, 2 * d));
      out.push_back(g * b.t(2 * d));
      break;
    }
    case ExtremalFamily::kTripleHalfPlusOne: {
      if (s != 2 * d + 1) region_violation(name, "s = 2d+1", s, d, r);
      if (r != 3) region_violation(name, "r = 3", s, d, r);
      if (binomial(s, d) < 3) region_violation(name, "C(s,d) >= 3", s, d, r);
      const Polynomial g = b.paired_differences(d - 1);
      for (unsigned i = 1; i <= 3; ++i) out.push_back(g * b.t(2 * d - 2 + i));
      break;
    }
    case ExtremalFamily::kTripleHalf: {
      if (s != 2 * d) region_violation(name, "s = 2d", s, d, r);
      if (r != 3) region_violation(name, "r = 3", s, d, r);
      if (binomial(s, d) < 3) region_violation(name, "C(s,d) >= 3", s, d, r);
      const Polynomial h = b.paired_differences(d - 2);
      out.push_back(h * b.diff(2 * d - 3, 2 * d - 2) * b.diff(2 * d - 1, 2 * d));
      out.push_back(h * b.diff(2 * d - 3, 2 * d - 1) * b.diff(2 * d - 2, 2 * d));
      out.push_back(h * b.diff(2 * d - 3, 2 * d - 2) * b.t(2 * d));
      break;
    }
    case ExtremalFamily::kTripleHalfMinusOne: {
      if (s + 1 != 2 * d) region_violation(name, "s = 2d-1", s, d, r);
      if (r != 3) region_violation(name, "r = 3", s, d, r);
      if (binomial(s, d) < 3) region_violation(name, "C(s,d) >= 3", s, d, r);
      const Polynomial h = b.paired_differences(d - 2);
      out.push_back(h * b.t(2 * d - 3) * b.t(2 * d - 2));
      out.push_back(h * b.t(2 * d - 3) * b.t(2 * d - 1));
      out.push_back(h * b.t(2 * d - 2) * b.t(2 * d - 1));
      break;
    }
  }

  if (rank(coefficient_matrix(out).matrix, *field) != out.size()) {
    throw Error(ErrorCode::kLinearlyDependent,
                std::string(name) + " family is not linearly independent for these parameters");
  }
  return out;
}

}  // namespace hyperweight
