#pragma once

// Slow reference implementations used to cross-check the library. They share
// no code paths with the searches under test beyond Field and rank().

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "hyperweight/codes.hpp"
#include "hyperweight/gf.hpp"
#include "hyperweight/linalg.hpp"
#include "hyperweight/poly.hpp"

namespace oracle {

using hyperweight::Field;
using hyperweight::FieldElement;
using hyperweight::LinearCode;
using hyperweight::Matrix;

inline std::uint64_t ipow(std::uint64_t b, int e) {
  if (e < 0) return 0;
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline std::uint64_t choose(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Arithmetic mod a prime, written out directly.
struct PrimeField {
  std::uint32_t p;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return (a + b) % p; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>(1ull * a * b % p); }
  std::uint32_t neg(std::uint32_t a) const { return (p - a) % p; }
  std::uint32_t inv(std::uint32_t a) const {
    for (std::uint32_t x = 1; x < p; ++x) {
      if (mul(a, x) == 1) return x;
    }
    return 0;
  }
};

// Digits of m in base q, most significant first, as a message of length k.
inline std::vector<FieldElement> message(std::uint64_t m, std::size_t k, std::uint32_t q) {
  std::vector<FieldElement> v(k);
  for (std::size_t i = k; i-- > 0;) {
    v[i] = {static_cast<std::uint32_t>(m % q)};
    m /= q;
  }
  return v;
}

// Minimum weight over all q^k - 1 nonzero messages.
inline std::uint64_t min_distance(const LinearCode& code) {
  const auto& f = code.field();
  const std::uint64_t total = ipow(f.q(), static_cast<int>(code.k()));
  std::uint64_t best = code.n();
  for (std::uint64_t m = 1; m < total; ++m) {
    const auto word = hyperweight::row_times(message(m, code.k(), f.q()), code.generator(), f);
    std::uint64_t w = 0;
    for (auto x : word) w += x.rep != 0;
    best = std::min(best, w);
  }
  return best;
}

// d_r as the smallest |S| such that the codewords vanishing outside S form a
// space of dimension >= r, i.e. k - rank(G restricted to the complement) >= r.
// Walks all column subsets, so keep n small.
inline std::uint64_t ghw(const LinearCode& code, unsigned r) {
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const Matrix& g = code.generator();
  std::optional<std::uint64_t> best;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    const auto size = static_cast<std::uint64_t>(__builtin_popcountll(mask));
    if (best && size >= *best) continue;
    Matrix rest(k, n - size);
    std::size_t col = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (mask >> c & 1) continue;
      for (std::size_t row = 0; row < k; ++row) rest(row, col) = g(row, c);
      ++col;
    }
    const std::size_t rk = n == size ? 0 : hyperweight::rank(rest, code.field());
    if (k - rk >= r) best = size;
  }
  return *best;
}

// Common zeros by evaluating every polynomial at every torus point built from
// powers of theta, without the library's log-table evaluation.
inline std::uint64_t common_zeros(const std::vector<hyperweight::Polynomial>& polys, const Field& f, unsigned s,
                                  bool projective) {
  const unsigned free = projective ? s - 1 : s;
  const std::uint64_t count = ipow(f.q() - 1, static_cast<int>(free));
  std::uint64_t zeros = 0;
  std::vector<FieldElement> pt(s, f.one());
  for (std::uint64_t i = 0; i < count; ++i) {
    std::uint64_t x = i;
    for (unsigned j = s; j-- > s - free;) {
      pt[j] = f.pow(f.theta(), x % (f.q() - 1));
      x /= f.q() - 1;
    }
    bool all = true;
    for (const auto& p : polys) all = all && p.evaluate(pt).rep == 0;
    zeros += all;
  }
  return zeros;
}

// Closed-form values, transcribed independently of the library's bounds
// module. The optional-returning ones give nullopt outside their region.

inline std::uint64_t dimension(hyperweight::CodeFamily fam, std::uint32_t q, unsigned s, unsigned d) {
  using hyperweight::CodeFamily;
  if (q == 2 && (fam == CodeFamily::kAffine || fam == CodeFamily::kProjective || fam == CodeFamily::kSquarefreeLeq))
    return 1;
  switch (fam) {
    case CodeFamily::kAffine:
    case CodeFamily::kProjective: return choose(s, d);
    case CodeFamily::kSquarefreeLeq: {
      std::uint64_t sum = 0;
      for (unsigned i = 0; i <= d; ++i) sum += choose(s, i);
      return sum;
    }
    case CodeFamily::kDeltaPrime: return ipow(q - 1, static_cast<int>(s)) - choose(s, d);
    case CodeFamily::kProjectiveDual: return ipow(q - 1, static_cast<int>(s - 1)) - choose(s, d);
  }
  return 0;
}

inline std::uint64_t toric_min_distance(bool projective, std::uint32_t q, unsigned s, unsigned d) {
  const int shift = projective ? 1 : 0;
  const int si = static_cast<int>(s), di = static_cast<int>(d);
  if (q == 2) return 1;
  if (d == s) return ipow(q - 1, si - shift);
  if (2 * d <= s) return ipow(q - 2, di) * ipow(q - 1, si - di - shift);
  return ipow(q - 2, si - di) * ipow(q - 1, di - shift);
}

inline std::uint64_t sfleq_min_distance(std::uint32_t q, unsigned s, unsigned d) {
  return ipow(q - 2, static_cast<int>(d)) * ipow(q - 1, static_cast<int>(s - d));
}

inline std::uint64_t sfleq_second_weight(std::uint32_t q, unsigned s, unsigned d) {
  const int si = static_cast<int>(s), di = static_cast<int>(d);
  if (d == s) return ipow(q - 2, si - 1) * (q - 1);
  return ipow(q - 2, di) * ipow(q - 1, si - di - 1) * q;
}

// Exact d_r where a proven region covers (q, s, d, r); q >= 3.
inline std::optional<std::uint64_t> exact_ghw(hyperweight::CodeFamily fam, std::uint32_t q, unsigned s, unsigned d,
                                              unsigned r) {
  using hyperweight::CodeFamily;
  const int si = static_cast<int>(s), di = static_cast<int>(d), ri = static_cast<int>(r);
  const std::uint64_t bracket = ipow(q - 1, ri) - 1;
  if (fam == CodeFamily::kSquarefreeLeq) {
    if (d + r < s + 2) return ipow(q - 2, di - 1) * ipow(q - 1, si - di - ri + 1) * bracket;
    if (r == 1) return sfleq_min_distance(q, s, d);
    if (r == 2) return sfleq_second_weight(q, s, d);
    return std::nullopt;
  }
  const int shift = fam == CodeFamily::kProjective ? 1 : 0;
  if (2 * d + r < s + 2) return ipow(q - 2, di - 1) * ipow(q - 1, si - di - ri + 1 - shift) * bracket;
  if (s + r < 2 * d + 2) {
    if (d == s) return toric_min_distance(shift == 1, q, s, d);  // r = 1 only
    return ipow(q - 2, si - di - 1) * ipow(q - 1, di - ri + 1 - shift) * bracket;
  }
  if (r == 1) return toric_min_distance(shift == 1, q, s, d);
  return std::nullopt;
}

// Stated common-zero counts on the projective torus for the boundary shapes.
inline std::uint64_t pair_half_zeros(std::uint32_t q, unsigned s, unsigned d) {
  return ipow(q - 1, static_cast<int>(s) - 1) - ipow(q - 2, static_cast<int>(d) - 1) * ipow(q - 1, static_cast<int>(s - d));
}
inline std::uint64_t triple_half_plus_one_zeros(std::uint32_t q, unsigned s, unsigned d) {
  return pair_half_zeros(q, s, d);
}
inline std::uint64_t triple_half_zeros(std::uint32_t q, unsigned s, unsigned d) {
  return ipow(q - 1, static_cast<int>(s) - 1) -
         ipow(q - 2, static_cast<int>(d) - 1) * ipow(q - 1, static_cast<int>(s - d) - 2) * (q * (q - 1) - 1);
}
inline std::uint64_t triple_half_minus_one_zeros(std::uint32_t q, unsigned s, unsigned d) {
  return ipow(q - 1, static_cast<int>(s) - 1) -
         ipow(q - 2, static_cast<int>(d) - 2) * ipow(q - 1, static_cast<int>(s - d) + 1);
}

}  // namespace oracle
