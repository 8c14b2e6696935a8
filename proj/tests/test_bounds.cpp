#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "hyperweight/bounds.hpp"
#include "hyperweight/error.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/verify.hpp"
#include "hyperweight/weights.hpp"
#include "oracle.hpp"

using namespace hyperweight;

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

// Grid points dominating some member of b, by direct enumeration.
std::uint64_t brute_shadow(const std::vector<ExponentVector>& b, std::uint32_t q, unsigned s) {
  const std::uint64_t total = oracle::ipow(q - 1, static_cast<int>(s));
  std::uint64_t count = 0;
  std::vector<std::uint32_t> c(s);
  for (std::uint64_t i = 0; i < total; ++i) {
    std::uint64_t x = i;
    for (unsigned j = 0; j < s; ++j) {
      c[j] = static_cast<std::uint32_t>(x % (q - 1));
      x /= q - 1;
    }
    const ExponentVector cv(c);
    count += std::any_of(b.begin(), b.end(), [&](const ExponentVector& a) { return poset_leq(a, cv); });
  }
  return count;
}

}  // namespace

TEST(ZeroBound, KnownValue) {
  const ZeroBound b = zero_count_bound(4, 3, 1, 2, BoundVariant::kHomogeneous);
  EXPECT_EQ(b.value, 3u);
  EXPECT_TRUE(has(b.sources, "pair"));
  EXPECT_TRUE(has(b.sources, "homogeneous-family"));
}

TEST(ZeroBound, SinglePolynomialValue) {
  // (q-1)^s - (q-2)^d (q-1)^{s-d} zeros at most, for d <= s/2.
  const ZeroBound b = zero_count_bound(5, 4, 2, 1, BoundVariant::kHomogeneous);
  EXPECT_EQ(b.value, 256u - 9u * 16u);
  EXPECT_TRUE(has(b.considered, "single-polynomial"));
}

TEST(ZeroBound, RegionViolation) {
  try {
    zero_count_bound(3, 3, 3, 2, BoundVariant::kHomogeneous);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRegionViolation);
  }
}

TEST(ZeroBound, NeverExceededOnRandomFamilies) {
  std::mt19937_64 rng(99);
  for (std::uint32_t q : {3u, 4u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      const PointSet pts = enumerate_affine_torus(f, s);
      for (unsigned d = 1; d < s; ++d) {
        for (auto variant : {BoundVariant::kHomogeneous, BoundVariant::kAtMost}) {
          const unsigned dim = static_cast<unsigned>(variant == BoundVariant::kHomogeneous
                                                         ? oracle::choose(s, d)
                                                         : squarefree_monomials_upto(s, d).size());
          for (unsigned r = 1; r <= std::min(3u, dim); ++r) {
            if (d + r >= s + 2 && r != 1) continue;
            const ZeroBound bound = zero_count_bound(q, s, d, r, variant);
            for (int trial = 0; trial < 50; ++trial) {
              const auto fam = random_squarefree_family(rng, f, s, d, r, variant);
              EXPECT_LE(count_common_zeros(fam, pts), bound.value);
            }
          }
        }
      }
    }
  }
}

TEST(Shadow, MatchesBruteForceAndInclusionExclusion) {
  std::mt19937_64 rng(8);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    for (unsigned s = 2; s <= 4; ++s) {
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<ExponentVector> b;
        const int size = 1 + trial % 4;
        for (int i = 0; i < size; ++i) {
          std::vector<std::uint32_t> e(s);
          for (auto& x : e) x = static_cast<std::uint32_t>(rng() % (q - 1));
          b.emplace_back(e);
        }
        const std::uint64_t expected = brute_shadow(b, q, s);
        EXPECT_EQ(shadow(b, q, s).size(), expected);
        EXPECT_EQ(shadow_size(b, q, s), expected);
        EXPECT_EQ(footprint_zero_bound(b, q, s), oracle::ipow(q - 1, static_cast<int>(s)) - expected);
      }
    }
  }
  EXPECT_THROW(shadow({{3, 0}}, 3, 2), Error);
}

TEST(Shadow, InclusionExclusionOnLargeGrid) {
  // 31^6 ~ 8.9e8 grid points: too many to enumerate.
  const std::vector<ExponentVector> b{{1, 1, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0}};
  const std::uint64_t g = 31;
  const std::uint64_t one = 30 * 30 * oracle::ipow(g, 4);
  const std::uint64_t both = 30 * 30 * 30 * oracle::ipow(g, 3);
  EXPECT_EQ(shadow_size(b, 32, 6), 2 * one - both);
}

TEST(Shadow, LowerBoundFormula) {
  EXPECT_EQ(shadow_lower_bound(3, 4, 2, 2, BoundVariant::kHomogeneous), 1u * 2u * 3u);
  EXPECT_THROW(shadow_lower_bound(3, 3, 3, 2, BoundVariant::kHomogeneous), Error);
}

TEST(HilbertFunction, CountsStandardMonomials) {
  // Ideal <t1 t2> in two variables: degree <= 2 has 6 monomials, one in the ideal.
  EXPECT_EQ(affine_hilbert_fn({{1, 1}}, 2, 2), 5u);
  EXPECT_EQ(affine_hilbert_fn({}, 3, 2), 10u);
  // Torus ideal walls give (q-1)^s once u is large enough.
  EXPECT_EQ(affine_hilbert_fn({{2, 0}, {0, 2}}, 2, 2), 4u);
}

TEST(Formula, KnownValues) {
  auto r = ghw_formula(CodeFamily::kAffine, 3, 3, 1, 2);
  EXPECT_EQ(r.status, FormulaStatus::kExact);
  EXPECT_EQ(*r.value, 6u);
  r = ghw_formula(CodeFamily::kAffine, 3, 4, 2, 2);
  EXPECT_EQ(r.status, FormulaStatus::kUpperBound);
  EXPECT_EQ(*r.value, 8u);
  r = ghw_formula(CodeFamily::kProjective, 3, 4, 2, 2);
  EXPECT_EQ(r.status, FormulaStatus::kUpperBound);
  EXPECT_EQ(*r.value, 4u);
  r = ghw_formula(CodeFamily::kAffine, 2, 3, 1, 2);
  EXPECT_EQ(r.status, FormulaStatus::kNotCovered);
  EXPECT_FALSE(r.value.has_value());
  r = ghw_formula(CodeFamily::kAffine, 2, 3, 1, 1);
  EXPECT_EQ(r.status, FormulaStatus::kExact);
  EXPECT_EQ(*r.value, 1u);
  EXPECT_THROW(ghw_formula(CodeFamily::kDeltaPrime, 3, 3, 1, 1), Error);
  EXPECT_THROW(ghw_formula(CodeFamily::kAffine, 3, 3, 1, 4), Error);
}

TEST(Formula, ExactValuesMatchIndependentTranscription) {
  for (std::uint32_t q : {3u, 4u, 5u, 7u}) {
    for (unsigned s = 2; s <= 6; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        for (auto fam : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq}) {
          const unsigned k = static_cast<unsigned>(oracle::dimension(fam, q, s, d));
          for (unsigned r = 1; r <= std::min(k, 4u); ++r) {
            const auto got = ghw_formula(fam, q, s, d, r);
            const auto want = oracle::exact_ghw(fam, q, s, d, r);
            if (want) {
              EXPECT_EQ(got.status, FormulaStatus::kExact);
              EXPECT_EQ(*got.value, *want) << code_family_name(fam) << " q=" << q << " s=" << s << " d=" << d
                                           << " r=" << r;
            } else {
              EXPECT_NE(got.status, FormulaStatus::kExact);
            }
          }
        }
      }
    }
  }
}

TEST(Formula, Dimensions) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (unsigned s = 2; s <= 5; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        for (auto fam : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq}) {
          EXPECT_EQ(dimension_formula(fam, q, s, d), oracle::dimension(fam, q, s, d));
        }
        if (q > 2) {
          EXPECT_EQ(dimension_formula(CodeFamily::kDeltaPrime, q, s, d),
                    oracle::dimension(CodeFamily::kDeltaPrime, q, s, d));
        }
      }
    }
  }
}
