#include "hyperweight/combinatorics.hpp"

#include "hyperweight/error.hpp"

namespace hyperweight {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow,
                "product " + std::to_string(a) + " * " + std::to_string(b) + " overflows 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorCode::kOverflow, "sum overflows 64 bits");
  }
  return out;
}

std::uint64_t checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp; ++i) out = checked_mul(out, base);
  return out;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return kSaturated;
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  for (unsigned i = 0; i < exp && out != kSaturated; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t out = 1;
  for (unsigned i = 1; i <= k; ++i) {
    // out * (n - k + i) is divisible by i at every step.
    out = checked_mul(out, n - k + i) / i;
  }
  return out;
}

std::uint64_t gaussian_binomial(unsigned k, unsigned r, std::uint64_t q) {
  if (r > k) return 0;
  // [k, j+1]_q = [k, j]_q * (q^{k-j} - 1) / (q^{j+1} - 1); every partial value is integral.
  unsigned __int128 acc = 1;
  for (unsigned j = 0; j < r; ++j) {
    const std::uint64_t num_pow = saturating_pow(q, k - j);
    const std::uint64_t den_pow = saturating_pow(q, j + 1);
    if (num_pow == kSaturated || den_pow == kSaturated) return kSaturated;
    acc *= static_cast<unsigned __int128>(num_pow - 1);
    acc /= static_cast<unsigned __int128>(den_pow - 1);
    if (acc > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(acc);
}

}  // namespace hyperweight
