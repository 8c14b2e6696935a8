#include "hyperweight/bounds.hpp"

#include <algorithm>
#include <string>

#include "hyperweight/combinatorics.hpp"
#include "hyperweight/error.hpp"

namespace hyperweight {

std::string_view bound_variant_name(BoundVariant v) {
  return v == BoundVariant::kHomogeneous ? "homogeneous" : "at-most";
}

BoundVariant parse_bound_variant(std::string_view name) {
  if (name == "homogeneous") return BoundVariant::kHomogeneous;
  if (name == "at-most" || name == "at_most") return BoundVariant::kAtMost;
  throw Error(ErrorCode::kBadParameters, "unknown bound variant '" + std::string(name) + "'");
}

std::string_view formula_status_name(FormulaStatus status) {
  switch (status) {
    case FormulaStatus::kExact: return "Exact";
    case FormulaStatus::kUpperBound: return "UpperBound";
    case FormulaStatus::kNotCovered: return "NotCovered";
  }
  return "unknown";
}

bool poset_leq(const ExponentVector& b, const ExponentVector& c) {
  if (b.size() != c.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "comparing vectors of length " + std::to_string(b.size()) + " and " + std::to_string(c.size()));
  }
  for (unsigned i = 0; i < b.size(); ++i) {
    if (b[i] > c[i]) return false;
  }
  return true;
}

namespace {

void check_in_grid(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s) {
  for (const auto& v : b) {
    if (v.size() != s) {
      throw Error(ErrorCode::kDimensionMismatch, "vector of length " + std::to_string(v.size()) + ", expected " +
                                                     std::to_string(s));
    }
    for (unsigned i = 0; i < s; ++i) {
      if (v[i] > q - 2) {
        throw Error(ErrorCode::kOutOfGrid,
                    "entry " + std::to_string(v[i]) + " outside 0.." + std::to_string(q - 2));
      }
    }
  }
}

bool dominated(const std::vector<std::uint32_t>& point, const std::vector<ExponentVector>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const ExponentVector& g) {
    for (unsigned i = 0; i < g.size(); ++i) {
      if (g[i] > point[i]) return false;
    }
    return true;
  });
}

// Visits {0, ..., q-2}^s in lexicographic order.
template <typename Visit>
void for_each_grid_point(std::uint32_t q, unsigned s, Visit&& visit) {
  std::vector<std::uint32_t> tuple(s, 0);
  const std::uint64_t count = saturating_pow(q - 1, s);
  for (std::uint64_t i = 0; i < count; ++i) {
    visit(tuple);
    for (unsigned j = s; j-- > 0;) {
      if (++tuple[j] < q - 1) break;
      tuple[j] = 0;
    }
  }
}

std::uint64_t pw(std::uint64_t base, unsigned exp) { return checked_pow(base, exp); }

[[noreturn]] void region_error(const std::string& inequality, std::uint32_t q, unsigned s, unsigned d, unsigned r) {
  throw Error(ErrorCode::kRegionViolation, "needs " + inequality + " (q=" + std::to_string(q) + ", s=" +
                                               std::to_string(s) + ", d=" + std::to_string(d) +
                                               ", r=" + std::to_string(r) + ")");
}

// (q-2)^{d-1} (q-1)^{s-d-r+1} [(q-1)^r - 1] with d+r-2 < s already checked.
std::uint64_t family_shadow_value(std::uint64_t q, unsigned s, unsigned d, unsigned r) {
  return checked_mul(checked_mul(pw(q - 2, d - 1), pw(q - 1, s - d - r + 1)), pw(q - 1, r) - 1);
}

std::uint64_t squarefree_count_upto(unsigned s, unsigned d) {
  std::uint64_t total = 0;
  for (unsigned i = 0; i <= d; ++i) total = checked_add(total, binomial(s, i));
  return total;
}

}  // namespace

GridSet shadow(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s) {
  check_in_grid(b, q, s);
  const std::uint64_t grid = saturating_pow(q - 1, s);
  if (grid > kShadowGridLimit) {
    throw Error(ErrorCode::kSizeCap, "grid of " + std::to_string(grid) + " points exceeds " +
                                         std::to_string(kShadowGridLimit) + "; use shadow_size");
  }
  GridSet out{q, s, {}};
  for_each_grid_point(q, s, [&](const std::vector<std::uint32_t>& t) {
    if (dominated(t, b)) out.members.emplace_back(t);
  });
  return out;
}

std::uint64_t shadow_size(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s) {
  check_in_grid(b, q, s);
  if (saturating_pow(q - 1, s) <= kShadowGridLimit) {
    std::uint64_t count = 0;
    for_each_grid_point(q, s, [&](const std::vector<std::uint32_t>& t) { count += dominated(t, b) ? 1 : 0; });
    return count;
  }
  if (b.size() > 20) {
    throw Error(ErrorCode::kSizeCap, "inclusion-exclusion over " + std::to_string(b.size()) + " generators");
  }
  // The up-sets of a subset intersect in the up-set of their join.
  __int128 total = 0;
  std::vector<std::uint32_t> join(s);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b.size()); ++mask) {
    std::fill(join.begin(), join.end(), 0u);
    int bits = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if ((mask >> j) & 1u) {
        ++bits;
        for (unsigned i = 0; i < s; ++i) join[i] = std::max(join[i], b[j][i]);
      }
    }
    __int128 up = 1;
    for (unsigned i = 0; i < s; ++i) up *= q - 1 - join[i];
    total += (bits % 2 == 1) ? up : -up;
  }
  return static_cast<std::uint64_t>(total);
}

std::uint64_t shadow_lower_bound(std::uint32_t q, unsigned s, unsigned d, unsigned r, BoundVariant variant) {
  if (q < 2 || s < 1 || d < 1 || d > s || r < 1) region_error("q >= 2, 1 <= d <= s, r >= 1", q, s, d, r);
  if (!(d + r < s + 2)) region_error("d+r-2 < s", q, s, d, r);
  const std::uint64_t available =
      variant == BoundVariant::kHomogeneous ? binomial(s, d) : squarefree_count_upto(s, d);
  if (r > available) region_error("r <= " + std::to_string(available) + " available monomials", q, s, d, r);
  return family_shadow_value(q, s, d, r);
}

std::uint64_t affine_hilbert_fn(const std::vector<ExponentVector>& gens, unsigned s, unsigned u) {
  for (const auto& g : gens) {
    if (g.size() != s) throw Error(ErrorCode::kDimensionMismatch, "generator length differs from s");
  }
  std::vector<std::uint32_t> point(s, 0);
  std::uint64_t count = 0;
  // Depth-first over exponent vectors with total degree <= u.
  auto walk = [&](auto&& self, unsigned i, unsigned remaining) -> void {
    if (i == s) {
      count += dominated(point, gens) ? 0 : 1;
      return;
    }
    for (unsigned a = 0; a <= remaining; ++a) {
      point[i] = a;
      self(self, i + 1, remaining - a);
    }
    point[i] = 0;
  };
  walk(walk, 0, u);
  return count;
}

std::uint64_t footprint_zero_bound(const std::vector<ExponentVector>& lms, std::uint32_t q, unsigned s) {
  return saturating_pow(q - 1, s) - shadow_size(lms, q, s);
}

ZeroBound zero_count_bound(std::uint32_t q, unsigned s, unsigned d, unsigned r, BoundVariant variant) {
  if (q < 2 || s < 1 || d < 1 || d > s || r < 1) region_error("q >= 2, 1 <= d <= s, r >= 1", q, s, d, r);
  const std::uint64_t total = pw(q - 1, s);
  std::vector<std::pair<std::string, std::uint64_t>> candidates;
  if (r == 1) candidates.emplace_back("single-polynomial", total - checked_mul(pw(q - 2, d), pw(q - 1, s - d)));
  if (r == 2 && d < s && variant == BoundVariant::kHomogeneous) {
    candidates.emplace_back("pair", total - checked_mul(checked_mul(q, pw(q - 2, d)), pw(q - 1, s - d - 1)));
  }
  if (d + r < s + 2) {
    candidates.emplace_back(variant == BoundVariant::kHomogeneous ? "homogeneous-family" : "at-most-family",
                            total - family_shadow_value(q, s, d, r));
  }
  if (candidates.empty()) region_error("r = 1, or r = 2 with d < s, or d+r-2 < s", q, s, d, r);

  ZeroBound out;
  out.value = total;
  for (const auto& [name, value] : candidates) {
    out.value = std::min(out.value, value);
    out.considered.push_back(name);
  }
  for (const auto& [name, value] : candidates) {
    if (value == out.value) out.sources.push_back(name);
  }
  return out;
}

std::uint64_t dimension_formula(CodeFamily family, std::uint32_t q, unsigned s, unsigned d) {
  if (q < 2 || s < 2 || d < 1 || d > s) {
    throw Error(ErrorCode::kBadParameters, "dimension formula needs q >= 2, s >= 2, 1 <= d <= s");
  }
  switch (family) {
    case CodeFamily::kAffine:
    case CodeFamily::kProjective: return q == 2 ? 1 : binomial(s, d);
    case CodeFamily::kSquarefreeLeq: return q == 2 ? 1 : squarefree_count_upto(s, d);
    case CodeFamily::kDeltaPrime:
    case CodeFamily::kProjectiveDual: {
      if (q == 2) throw Error(ErrorCode::kBadParameters, "dual constructions need q >= 3");
      const std::uint64_t n = pw(q - 1, family == CodeFamily::kDeltaPrime ? s : s - 1);
      const std::uint64_t k = binomial(s, d);
      if (k > n) throw Error(ErrorCode::kBadParameters, "C(s,d) exceeds the code length");
      return n - k;
    }
  }
  throw Error(ErrorCode::kBadParameters, "unknown code family");
}

namespace {

struct Candidate {
  std::string source;
  std::string region;
  std::uint64_t value;
};

// a * b / (q-2) when the (q-2)^{-1} factor shows up at d = s; exact by
// construction since r = 1 there and the bracket equals q-2.
std::uint64_t divide_exact(std::uint64_t numerator, std::uint64_t divisor) {
  if (divisor == 0 || numerator % divisor != 0) {
    throw Error(ErrorCode::kInternalInconsistency, "non-integral formula value");
  }
  return numerator / divisor;
}

// Value of (q-2)^{e2} (q-1)^{e1} [(q-1)^r - 1] with e2 possibly -1.
std::uint64_t ghw_term(std::uint64_t q, int e2, unsigned e1, unsigned r) {
  const std::uint64_t rest = checked_mul(pw(q - 1, e1), pw(q - 1, r) - 1);
  if (e2 < 0) return divide_exact(rest, q - 2);
  return checked_mul(pw(q - 2, static_cast<unsigned>(e2)), rest);
}

void toric_exact(bool projective, std::uint64_t q, unsigned s, unsigned d, unsigned r, std::vector<Candidate>& out) {
  const unsigned shift = projective ? 1 : 0;
  const std::string prefix = projective ? "projective" : "affine";
  if (r == 1) {
    std::uint64_t v = 0;
    std::string region;
    if (2 * d <= s) {
      v = checked_mul(pw(q - 2, d), pw(q - 1, s - d - shift));
      region = "d <= s/2";
    } else if (d < s) {
      v = checked_mul(pw(q - 2, s - d), pw(q - 1, d - shift));
      region = "s/2 < d < s";
    } else {
      v = pw(q - 1, s - shift);
      region = "d = s";
    }
    out.push_back({"toric-min-distance", region, v});
  }
  if (2 * d + r < s + 2) {
    out.push_back({prefix + "-ghw-low-degree", "2d+r-2 < s",
                   ghw_term(q, static_cast<int>(d) - 1, s - d - r + 1 - shift, r)});
  }
  if (s + r < 2 * d + 2) {
    // s < 2d-r+2 forces r <= d whenever d < s, so d-r+1-shift >= 0.
    out.push_back({prefix + "-ghw-high-degree", "s < 2d-r+2",
                   ghw_term(q, static_cast<int>(s) - static_cast<int>(d) - 1, d - r + 1 - shift, r)});
  }
}

std::optional<Candidate> toric_upper(bool projective, std::uint64_t q, unsigned s, unsigned d, unsigned r) {
  const unsigned shift = projective ? 1 : 0;
  if (s == 2 * d && r == 2) {
    return Candidate{"bound-pair-s-eq-2d", "s = 2d, r = 2",
                     checked_mul(pw(q - 2, d - 1), pw(q - 1, s - d + 1 - shift))};
  }
  if (s == 2 * d + 1 && r == 3) {
    return Candidate{"bound-triple-s-eq-2d-plus-1", "s = 2d+1, r = 3",
                     checked_mul(pw(q - 2, d - 1), pw(q - 1, s - d + 1 - shift))};
  }
  if (s == 2 * d && r == 3 && d >= 2) {
    return Candidate{"bound-triple-s-eq-2d", "s = 2d, r = 3",
                     checked_mul(checked_mul(pw(q - 2, d - 1), pw(q - 1, d - 1 - shift)), q * (q - 1) - 1)};
  }
  if (s + 1 == 2 * d && r == 3 && d >= 2) {
    return Candidate{"bound-triple-s-eq-2d-minus-1", "s = 2d-1, r = 3",
                     checked_mul(pw(q - 2, d - 2), pw(q - 1, s - d + 2 - shift))};
  }
  return std::nullopt;
}

void sfleq_exact(std::uint64_t q, unsigned s, unsigned d, unsigned r, std::vector<Candidate>& out) {
  if (r == 1) out.push_back({"sfleq-min-distance", "q >= 3", checked_mul(pw(q - 2, d), pw(q - 1, s - d))});
  if (r == 2) {
    if (d == s) {
      out.push_back({"sfleq-second-weight", "d = s", checked_mul(pw(q - 2, s - 1), q - 1)});
    } else {
      out.push_back({"sfleq-second-weight", "d < s",
                     checked_mul(checked_mul(pw(q - 2, d), pw(q - 1, s - d - 1)), q)});
    }
  }
  if (d + r < s + 2) {
    out.push_back({"sfleq-ghw", "d+r-2 < s", ghw_term(q, static_cast<int>(d) - 1, s - d - r + 1, r)});
  }
}

std::string join(const std::vector<Candidate>& cs, std::string Candidate::*field) {
  std::string out;
  for (const auto& c : cs) {
    if (!out.empty()) out += "; ";
    out += c.*field;
  }
  return out;
}

}  // namespace

FormulaResult ghw_formula(CodeFamily family, std::uint32_t q, unsigned s, unsigned d, unsigned r) {
  if (family != CodeFamily::kAffine && family != CodeFamily::kProjective && family != CodeFamily::kSquarefreeLeq) {
    throw Error(ErrorCode::kBadParameters,
                "no weight formulas for family " + std::string(code_family_name(family)));
  }
  if (r < 1) throw Error(ErrorCode::kBadParameters, "r must be at least 1");
  const std::uint64_t k = dimension_formula(family, q, s, d);

  if (q == 2) {
    if (r == 1) return {FormulaStatus::kExact, 1, "binary-field", "q = 2"};
    return {FormulaStatus::kNotCovered, std::nullopt, "", "q = 2 codes have dimension 1"};
  }
  if (r > k) {
    throw Error(ErrorCode::kBadParameters, "r = " + std::to_string(r) + " exceeds dimension " + std::to_string(k));
  }

  std::vector<Candidate> exact;
  std::optional<Candidate> upper;
  std::string uncovered;
  if (family == CodeFamily::kSquarefreeLeq) {
    sfleq_exact(q, s, d, r, exact);
    uncovered = "r > 2 and d+r-2 >= s";
  } else {
    const bool projective = family == CodeFamily::kProjective;
    toric_exact(projective, q, s, d, r, exact);
    upper = toric_upper(projective, q, s, d, r);
    uncovered = "2d-r+2 <= s <= 2d+r-2";
  }

  if (!exact.empty()) {
    for (const auto& c : exact) {
      if (c.value != exact.front().value) {
        throw Error(ErrorCode::kInternalInconsistency, "exact formulas disagree: " + exact.front().source + " = " +
                                                           std::to_string(exact.front().value) + ", " + c.source +
                                                           " = " + std::to_string(c.value));
      }
    }
    return {FormulaStatus::kExact, exact.front().value, join(exact, &Candidate::source),
            join(exact, &Candidate::region)};
  }
  if (upper) return {FormulaStatus::kUpperBound, upper->value, upper->source, upper->region};
  return {FormulaStatus::kNotCovered, std::nullopt, "", uncovered};
}

}  // namespace hyperweight
