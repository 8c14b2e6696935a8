#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace hyperweight {

// An element of F_q in canonical encoding: the residue for prime fields,
// otherwise the base-p digit string of its polynomial-basis coordinates
// (digit i is the coefficient of x^i).
struct FieldElement {
  std::uint32_t rep = 0;

  friend constexpr bool operator==(FieldElement, FieldElement) = default;
  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

inline constexpr std::uint64_t kDefaultFieldCap = 1u << 16;
inline constexpr std::uint32_t kLogTableLimit = 1u << 12;

/// The finite field F_q with a canonical modulus and primitive element.
///
/// Construction is deterministic: the modulus is the smallest monic
/// irreducible of degree e when its lower coefficients are read as a base-p
/// integer, and theta is the smallest rep generating F_q^*. Two processes
/// building the same q therefore agree on every rep.
///
/// Immutable after construction; share it through FieldPtr.
class Field {
 public:
  static std::shared_ptr<const Field> Make(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);

  std::uint32_t q() const { return q_; }
  std::uint32_t p() const { return p_; }
  unsigned e() const { return e_; }
  /// Coefficients c_0..c_e of the monic modulus, low degree first. Empty for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FieldElement theta() const { return theta_; }
  bool has_log_tables() const { return !log_.empty(); }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Element with the given rep; throws kBadParameters when rep >= q.
  FieldElement element(std::uint32_t rep) const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t value) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement inv(FieldElement a) const;
  FieldElement div(FieldElement a, FieldElement b) const { return mul(a, inv(b)); }
  FieldElement pow(FieldElement a, std::uint64_t k) const;

  /// theta^k for any k; backed by a (q-1)-entry table kept for every field.
  FieldElement theta_pow(std::uint64_t k) const { return {theta_powers_[k % (q_ - 1)]}; }
  /// Discrete logarithm base theta of a nonzero element.
  std::uint32_t log(FieldElement a) const;

  bool operator==(const Field& other) const {
    return q_ == other.q_ && modulus_ == other.modulus_ && theta_ == other.theta_;
  }

 private:
  Field() = default;

  FieldElement schoolbook_mul(FieldElement a, FieldElement b) const;
  FieldElement digit_add(FieldElement a, FieldElement b) const;
  FieldElement slow_pow(FieldElement a, std::uint64_t k) const;
  void find_modulus();
  void find_theta();
  void build_tables();

  std::uint32_t q_ = 0;
  std::uint32_t p_ = 0;
  unsigned e_ = 0;
  std::vector<std::uint32_t> modulus_;
  FieldElement theta_{};
  std::vector<std::uint32_t> theta_powers_;
  // Only populated when q <= kLogTableLimit.
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> antilog_;  // doubled so log sums need no reduction
  std::vector<std::int32_t> zech_;      // log(1 + theta^i), -1 when 1 + theta^i = 0
};

using FieldPtr = std::shared_ptr<const Field>;

FieldPtr make_field(std::uint64_t q, std::uint64_t cap = kDefaultFieldCap);
FieldElement field_inverse(FieldElement a, const Field& field);
FieldElement primitive_element(const Field& field);

/// Throws kFieldMismatch unless both handles describe the same field.
void require_same_field(const Field& a, const Field& b);

}  // namespace hyperweight
