#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperweight/gf.hpp"
#include "hyperweight/poly.hpp"

namespace hyperweight {

enum class TorusKind { kAffine, kProjective };

inline constexpr std::uint64_t kDefaultPointCap = 100'000'000;

/// Ordered points of the affine torus (F_q^*)^s or the projective torus
/// {1} x (F_q^*)^{s-1}. Point i is (theta^{e_1}, ..., theta^{e_s}) where
/// (e_1, ..., e_s) is the i-th exponent tuple in lexicographic order.
/// Both the points and their theta-exponents are stored.
class PointSet {
 public:
  TorusKind kind() const { return kind_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  unsigned num_vars() const { return s_; }
  std::size_t size() const { return s_ == 0 ? 0 : points_.size() / s_; }

  std::span<const FieldElement> point(std::size_t i) const { return {points_.data() + i * s_, s_}; }
  /// Discrete logs base theta of the coordinates of point i.
  std::span<const std::uint32_t> exponents(std::size_t i) const { return {logs_.data() + i * s_, s_}; }

 private:
  friend PointSet enumerate_affine_torus(const FieldPtr&, unsigned, std::uint64_t);
  friend PointSet enumerate_projective_torus(const FieldPtr&, unsigned, std::uint64_t);

  TorusKind kind_ = TorusKind::kAffine;
  FieldPtr field_;
  unsigned s_ = 0;
  std::vector<FieldElement> points_;
  std::vector<std::uint32_t> logs_;
};

/// Throws kSizeCap when (q-1)^s exceeds cap.
PointSet enumerate_affine_torus(const FieldPtr& field, unsigned s, std::uint64_t cap = kDefaultPointCap);
PointSet enumerate_projective_torus(const FieldPtr& field, unsigned s, std::uint64_t cap = kDefaultPointCap);

std::vector<FieldElement> evaluate(const Polynomial& f, const PointSet& pts);

/// Number of points where every polynomial vanishes. Points are split into
/// `threads` contiguous ranges; the sum does not depend on the split.
std::uint64_t count_common_zeros(const std::vector<Polynomial>& polys, const PointSet& pts, unsigned threads = 1);

}  // namespace hyperweight
