#pragma once

#include <cstdint>
#include <limits>

namespace hyperweight {

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

// Exact integer helpers. The checked_* variants throw Error(kOverflow); the
// saturating_* variants clamp to kSaturated, which is what budget guards want.
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_add(std::uint64_t a, std::uint64_t b);
std::uint64_t checked_pow(std::uint64_t base, unsigned exp);
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);
std::uint64_t saturating_pow(std::uint64_t base, unsigned exp);

std::uint64_t binomial(unsigned n, unsigned k);

// Number of r-dimensional subspaces of F_q^k, saturated at kSaturated.
std::uint64_t gaussian_binomial(unsigned k, unsigned r, std::uint64_t q);

}  // namespace hyperweight
