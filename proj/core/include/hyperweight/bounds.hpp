#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hyperweight/codes.hpp"
#include "hyperweight/poly.hpp"

namespace hyperweight {

/// Which polynomial space a zero-count or shadow bound talks about:
/// homogeneous square-free of degree d, or square-free of degree <= d.
enum class BoundVariant { kHomogeneous, kAtMost };

std::string_view bound_variant_name(BoundVariant v);
BoundVariant parse_bound_variant(std::string_view name);

/// Exponent vectors inside {0, ..., q-2}^s.
struct GridSet {
  std::uint32_t q = 0;
  unsigned s = 0;
  std::vector<ExponentVector> members;  // lexicographic order of the tuples

  std::size_t size() const { return members.size(); }
};

/// Componentwise b <= c.
bool poset_leq(const ExponentVector& b, const ExponentVector& c);

inline constexpr std::uint64_t kShadowGridLimit = 10'000'000;

/// Up-set of B inside the grid. Enumerates the grid, so it throws kSizeCap
/// above kShadowGridLimit points; kOutOfGrid if B leaves the grid.
GridSet shadow(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s);

/// |shadow(B)|. Enumerates small grids, otherwise uses inclusion-exclusion
/// over componentwise maxima of subsets of B (|B| <= 20).
std::uint64_t shadow_size(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s);

/// (q-2)^{d-1} (q-1)^{s-d-r+1} [(q-1)^r - 1], the minimum shadow of r
/// distinct points of degree d (or degree <= d) in {0,1}^s. Needs d+r-2 < s.
std::uint64_t shadow_lower_bound(std::uint32_t q, unsigned s, unsigned d, unsigned r, BoundVariant variant);

/// Number of exponent vectors of total degree <= u outside the monomial
/// ideal generated by `gens`.
std::uint64_t affine_hilbert_fn(const std::vector<ExponentVector>& gens, unsigned s, unsigned u);

/// (q-1)^s - |shadow(lms)|: the standard-monomial count bounding the common
/// zeros on the torus of polynomials with these leading monomials.
std::uint64_t footprint_zero_bound(const std::vector<ExponentVector>& lms, std::uint32_t q, unsigned s);

struct ZeroBound {
  std::uint64_t value = 0;
  std::vector<std::string> sources;  // every applicable bound attaining `value`
  std::vector<std::string> considered;  // every applicable bound
};

/// Tightest known bound on the common torus zeros of r linearly independent
/// square-free polynomials. Sources: single-polynomial (r = 1),
/// pair (r = 2, homogeneous, d < s), homogeneous-family / at-most-family
/// (d+r-2 < s). Throws kRegionViolation if none applies.
ZeroBound zero_count_bound(std::uint32_t q, unsigned s, unsigned d, unsigned r, BoundVariant variant);

enum class FormulaStatus { kExact, kUpperBound, kNotCovered };

std::string_view formula_status_name(FormulaStatus status);

struct FormulaResult {
  FormulaStatus status = FormulaStatus::kNotCovered;
  std::optional<std::uint64_t> value;
  std::string source;
  std::string region;
};

/// Closed-form d_r for affine, projective and sfleq codes. Regions are the
/// strict inequalities as proved; nothing is extrapolated past them.
/// Throws kBadParameters for other families or r outside 1..k, and
/// kInternalInconsistency if two exact formulas disagree.
FormulaResult ghw_formula(CodeFamily family, std::uint32_t q, unsigned s, unsigned d, unsigned r);

/// Closed-form dimension of every code family.
std::uint64_t dimension_formula(CodeFamily family, std::uint32_t q, unsigned s, unsigned d);

}  // namespace hyperweight
