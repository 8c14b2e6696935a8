#include <random>
#include <set>

#include <gtest/gtest.h>

#include "hyperweight/error.hpp"
#include "hyperweight/poly.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/verify.hpp"
#include "oracle.hpp"

using namespace hyperweight;

namespace {

Polynomial binomial_factor(const FieldPtr& f, unsigned s, unsigned i, unsigned j) {
  return Polynomial::variable(f, s, i) - Polynomial::variable(f, s, j);
}

void expect_code(ErrorCode code, const auto& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << ErrorCodeName(code);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), code) << e.what();
  }
}

}  // namespace

TEST(Grlex, DegreeFirstThenFirstVariable) {
  EXPECT_EQ(grlex_compare({1, 1, 0}, {0, 0, 1}), std::strong_ordering::greater);
  EXPECT_EQ(grlex_compare({1, 0, 1}, {0, 1, 1}), std::strong_ordering::greater);
  EXPECT_EQ(grlex_compare({0, 1, 1}, {0, 1, 1}), std::strong_ordering::equal);
  EXPECT_THROW(grlex_compare({1, 0}, {1, 0, 0}), Error);
}

TEST(Monomials, HypersimplexCountAndOrder) {
  for (unsigned s = 1; s <= 7; ++s) {
    for (unsigned d = 1; d <= s; ++d) {
      const auto ms = hypersimplex_monomials(s, d);
      EXPECT_EQ(ms.size(), oracle::choose(s, d));
      for (std::size_t i = 0; i + 1 < ms.size(); ++i)
        EXPECT_EQ(grlex_compare(ms[i], ms[i + 1]), std::strong_ordering::greater);
      for (const auto& m : ms) {
        EXPECT_EQ(m.degree(), d);
        EXPECT_TRUE(m.is_square_free());
      }
    }
  }
  EXPECT_THROW(hypersimplex_monomials(3, 0), Error);
  const auto upto = squarefree_monomials_upto(4, 2);
  EXPECT_EQ(upto.size(), 11u);
  EXPECT_EQ(upto.back(), ExponentVector::zeros(4));
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const auto f = make_field(5);
  const Polynomial x = Polynomial::variable(f, 2, 1);
  const Polynomial y = Polynomial::variable(f, 2, 2);
  const Polynomial p = (x - y) * (x + y);  // x^2 - y^2
  EXPECT_EQ(p.num_terms(), 2u);
  EXPECT_TRUE(p.is_homogeneous());
  EXPECT_EQ(p.degree(), 2u);
  EXPECT_FALSE(is_square_free(p));
  const std::vector<FieldElement> pt{{3}, {2}};
  EXPECT_EQ(p.evaluate(pt).rep, (9 + 5 - 4) % 5);
  EXPECT_TRUE((p - p).is_zero());
  const auto lt = leading_monomial(p);
  EXPECT_EQ(lt.monomial, (ExponentVector{2, 0}));
  EXPECT_THROW(leading_monomial(Polynomial(f, 2)), Error);
  EXPECT_THROW(x * Polynomial::variable(make_field(7), 2, 1), Error);
}

TEST(StarTransform, IsAnInvolutionAndInvertsZeros) {
  std::mt19937_64 rng(3);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      const PointSet pts = enumerate_affine_torus(f, s);
      for (unsigned d = 1; d < s; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
          const auto fam = random_squarefree_family(rng, f, s, d, 1, BoundVariant::kHomogeneous);
          const Polynomial& g = fam[0];
          const Polynomial star = star_transform(g);
          EXPECT_EQ(star_transform(star), g);
          EXPECT_EQ(star.degree(), s - d);
          std::vector<FieldElement> inv(s);
          for (std::size_t i = 0; i < pts.size(); ++i) {
            const auto p = pts.point(i);
            for (unsigned j = 0; j < s; ++j) inv[j] = f->inv(p[j]);
            EXPECT_EQ(g.evaluate(p).rep == 0, star.evaluate(inv).rep == 0);
          }
        }
      }
    }
  }
}

TEST(StarTransform, RejectsNonHomogeneousOrSquare) {
  const auto f = make_field(3);
  const Polynomial x = Polynomial::variable(f, 2, 1);
  expect_code(ErrorCode::kNotHomogeneousSquareFree,
              [&] { star_transform(x + Polynomial::constant(f, 2, f->one())); });
  expect_code(ErrorCode::kNotHomogeneousSquareFree, [&] { star_transform(x * x); });
}

TEST(DistinctLmReduce, PreservesZerosAndSeparatesLeadingMonomials) {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {3u, 4u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        const unsigned rmax = std::min<unsigned>(3, static_cast<unsigned>(oracle::choose(s, d)));
        for (unsigned r = 1; r <= rmax; ++r) {
          auto fam = random_squarefree_family(rng, f, s, d, r, BoundVariant::kHomogeneous);
          // Share a leading monomial on purpose.
          if (r >= 2) fam[1] = fam[1] + fam[0];
          const auto red = distinct_lm_reduce(fam);
          ASSERT_EQ(red.size(), r);
          std::set<std::vector<std::uint32_t>> lms;
          for (const auto& g : red) lms.insert(leading_monomial(g).monomial.exps());
          EXPECT_EQ(lms.size(), r);
          EXPECT_EQ(oracle::common_zeros(red, *f, s, false), oracle::common_zeros(fam, *f, s, false));
        }
      }
    }
  }
}

TEST(DistinctLmReduce, RejectsDependentFamilies) {
  const auto f = make_field(5);
  const Polynomial x = Polynomial::variable(f, 2, 1);
  expect_code(ErrorCode::kLinearlyDependent, [&] { distinct_lm_reduce({x, x.scaled({2})}); });
  expect_code(ErrorCode::kZeroInput, [&] { distinct_lm_reduce({x, Polynomial(f, 2)}); });
}

TEST(ExtremalFamily, ZeroCountsMatchStatedValues) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned d = 2; d <= 3; ++d) {
      struct Shape {
        ExtremalFamily kind;
        unsigned s;
        unsigned r;
        std::uint64_t proj;
      };
      const Shape shapes[] = {
          {ExtremalFamily::kPairHalf, 2 * d, 2, oracle::pair_half_zeros(q, 2 * d, d)},
          {ExtremalFamily::kTripleHalfPlusOne, 2 * d + 1, 3, oracle::triple_half_plus_one_zeros(q, 2 * d + 1, d)},
          {ExtremalFamily::kTripleHalf, 2 * d, 3, oracle::triple_half_zeros(q, 2 * d, d)},
          {ExtremalFamily::kTripleHalfMinusOne, 2 * d - 1, 3, oracle::triple_half_minus_one_zeros(q, 2 * d - 1, d)},
      };
      for (const auto& sh : shapes) {
        if (q == 5 && sh.s > 5) continue;
        const auto fam = extremal_family(sh.kind, f, sh.s, d, sh.r);
        ASSERT_EQ(fam.size(), sh.r);
        for (const auto& g : fam) {
          EXPECT_TRUE(g.is_homogeneous());
          EXPECT_EQ(g.degree(), d);
          EXPECT_TRUE(is_square_free(g));
        }
        const auto proj = count_common_zeros(fam, enumerate_projective_torus(f, sh.s));
        const auto aff = count_common_zeros(fam, enumerate_affine_torus(f, sh.s));
        EXPECT_EQ(proj, sh.proj) << extremal_family_name(sh.kind) << " q=" << q << " d=" << d;
        EXPECT_EQ(aff, (q - 1) * sh.proj);
      }
    }
  }
}

TEST(ExtremalFamily, RegionsAreEnforced) {
  const auto f = make_field(3);
  expect_code(ErrorCode::kRegionViolation, [&] { extremal_family(ExtremalFamily::kLowDegree, f, 4, 2, 2); });
  expect_code(ErrorCode::kRegionViolation, [&] { extremal_family(ExtremalFamily::kPairHalf, f, 5, 2, 2); });
  EXPECT_TRUE(extremal_family(ExtremalFamily::kLowDegree, f, 5, 2, 0).empty());
  EXPECT_EQ(parse_extremal_family("triple-half"), ExtremalFamily::kTripleHalf);
  EXPECT_THROW(parse_extremal_family("nope"), Error);
}

TEST(ExtremalFamily, PairHalfMatchesHandExpansion) {
  // (t1 - t2)(t3 - t4) and (t1 - t2) t4 at s = 4, d = 2.
  const auto f = make_field(3);
  const auto fam = extremal_family(ExtremalFamily::kPairHalf, f, 4, 2, 2);
  const Polynomial a = binomial_factor(f, 4, 1, 2) * binomial_factor(f, 4, 3, 4);
  const Polynomial b = binomial_factor(f, 4, 1, 2) * Polynomial::variable(f, 4, 4);
  EXPECT_EQ(fam[0], a);
  EXPECT_EQ(fam[1], b);
}
