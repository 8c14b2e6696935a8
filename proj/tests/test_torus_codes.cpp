#include <random>

#include <gtest/gtest.h>

#include "hyperweight/bounds.hpp"
#include "hyperweight/codes.hpp"
#include "hyperweight/error.hpp"
#include "hyperweight/torus.hpp"
#include "hyperweight/verify.hpp"
#include "oracle.hpp"

using namespace hyperweight;

TEST(Torus, AffineOrderIsLexicographicInExponents) {
  const auto f = make_field(4);
  const PointSet pts = enumerate_affine_torus(f, 2);
  ASSERT_EQ(pts.size(), 9u);
  EXPECT_EQ(pts.kind(), TorusKind::kAffine);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto e = pts.exponents(i);
    EXPECT_EQ(e[0], i / 3);
    EXPECT_EQ(e[1], i % 3);
    for (unsigned j = 0; j < 2; ++j) EXPECT_EQ(pts.point(i)[j], f->theta_pow(e[j]));
  }
}

TEST(Torus, ProjectiveFixesFirstCoordinate) {
  const auto f = make_field(5);
  const PointSet proj = enumerate_projective_torus(f, 3);
  const PointSet aff = enumerate_affine_torus(f, 2);
  ASSERT_EQ(proj.size(), aff.size());
  for (std::size_t i = 0; i < proj.size(); ++i) {
    EXPECT_EQ(proj.point(i)[0], f->one());
    EXPECT_EQ(proj.point(i)[1], aff.point(i)[0]);
    EXPECT_EQ(proj.point(i)[2], aff.point(i)[1]);
  }
  EXPECT_THROW(enumerate_projective_torus(f, 1), Error);
}

TEST(Torus, SizeCap) {
  const auto f = make_field(256);
  try {
    enumerate_affine_torus(f, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeCap);
  }
}

TEST(Torus, EvaluationMatchesPolynomialEvaluate) {
  std::mt19937_64 rng(1);
  for (std::uint32_t q : {3u, 4u, 7u, 8u, 9u}) {
    const auto f = make_field(q);
    const PointSet pts = enumerate_affine_torus(f, 3);
    for (int trial = 0; trial < 5; ++trial) {
      const auto fam = random_squarefree_family(rng, f, 3, 2, 1, BoundVariant::kAtMost);
      const auto vals = evaluate(fam[0], pts);
      for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(vals[i], fam[0].evaluate(pts.point(i)));
    }
  }
}

TEST(Torus, ZeroCountIndependentOfThreads) {
  std::mt19937_64 rng(2);
  const auto f = make_field(5);
  const PointSet pts = enumerate_affine_torus(f, 6);
  for (int trial = 0; trial < 5; ++trial) {
    const auto fam = random_squarefree_family(rng, f, 6, 3, 2, BoundVariant::kHomogeneous);
    const auto one = count_common_zeros(fam, pts, 1);
    EXPECT_EQ(one, count_common_zeros(fam, pts, 3));
    EXPECT_EQ(one, oracle::common_zeros(fam, *f, 6, false));
  }
}

TEST(Torus, HomogeneousZerosScaleByQMinusOne) {
  std::mt19937_64 rng(4);
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      const PointSet aff = enumerate_affine_torus(f, s);
      const PointSet proj = enumerate_projective_torus(f, s);
      for (unsigned d = 1; d < s; ++d) {
        for (int trial = 0; trial < 10; ++trial) {
          const auto fam = random_squarefree_family(rng, f, s, d, 1 + trial % 2, BoundVariant::kHomogeneous);
          EXPECT_EQ(count_common_zeros(fam, aff), (q - 1) * count_common_zeros(fam, proj));
        }
      }
    }
  }
}

TEST(Codes, FamilyNamesRoundTrip) {
  for (auto fam : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq, CodeFamily::kDeltaPrime,
                   CodeFamily::kProjectiveDual}) {
    EXPECT_EQ(parse_code_family(code_family_name(fam)), fam);
  }
  EXPECT_THROW(parse_code_family("toric"), Error);
}

TEST(Codes, DimensionsMatchClosedForm) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        for (auto fam : {CodeFamily::kAffine, CodeFamily::kProjective, CodeFamily::kSquarefreeLeq}) {
          const LinearCode c = build_code(fam, f, s, d);
          EXPECT_EQ(c.k(), oracle::dimension(fam, q, s, d)) << code_family_name(fam) << " q=" << q << " s=" << s;
          EXPECT_FALSE(c.rank_defect());
          EXPECT_EQ(c.n(), oracle::ipow(q - 1, static_cast<int>(fam == CodeFamily::kProjective ? s - 1 : s)));
        }
      }
    }
  }
}

TEST(Codes, KnownValues) {
  const LinearCode binary = build_affine_toric(make_field(2), 3, 2);
  EXPECT_EQ(binary.n(), 1u);
  EXPECT_EQ(binary.k(), 1u);
  const LinearCode c = build_affine_toric(make_field(3), 3, 1);
  EXPECT_EQ(c.n(), 8u);
  EXPECT_EQ(c.k(), 3u);
  EXPECT_EQ(hat_complement(*make_field(3), 4, 2).size(), 10u);
}

TEST(Codes, GeneratorIsRrefOfEvaluationMatrix) {
  const auto f = make_field(4);
  const PointSet pts = enumerate_affine_torus(f, 3);
  const Matrix ev = evaluation_matrix(hypersimplex_monomials(3, 2), pts);
  const LinearCode c = build_affine_toric(f, 3, 2);
  EXPECT_EQ(c.generator(), rref(ev, *f).matrix);
  EXPECT_EQ(c.pivots(), rref(ev, *f).pivots);
}

TEST(Codes, HatMap) {
  EXPECT_EQ(hat({0, 1, 2}, 4), (ExponentVector{0, 2, 1}));
  EXPECT_EQ(hat(hat({0, 3, 1}, 5), 5), (ExponentVector{0, 3, 1}));
  EXPECT_THROW(hat({4}, 4), Error);
  EXPECT_THROW(hat_complement(*make_field(2), 3, 1), Error);
}

TEST(Codes, GeneratorCsv) {
  const LinearCode c = build_affine_toric(make_field(3), 2, 2);
  EXPECT_EQ(generator_csv(c), "1,2,2,1\n");
}

TEST(Duals, AffineDualEqualsNullspace) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 3; ++s) {
      const PointSet pts = enumerate_affine_torus(f, s);
      for (unsigned d = 1; d <= s; ++d) {
        const LinearCode code = build_affine_toric(f, s, d);
        const LinearCode dual = build_delta_prime_code(f, s, d);
        EXPECT_EQ(dual.k(), oracle::dimension(CodeFamily::kDeltaPrime, q, s, d));
        EXPECT_EQ(dual.generator(), nullspace(code.generator(), *f));
        const Matrix a = evaluation_matrix(hypersimplex_monomials(s, d), pts);
        const Matrix b = evaluation_matrix(hat_complement(*f, s, d).members, pts);
        for (std::size_t i = 0; i < a.rows(); ++i)
          for (std::size_t j = 0; j < b.rows(); ++j) EXPECT_EQ(dot(a.row(i), b.row(j), *f), f->zero());
      }
    }
  }
}

TEST(Duals, ProjectiveDualEqualsNullspace) {
  for (std::uint32_t q : {3u, 4u, 5u}) {
    const auto f = make_field(q);
    for (unsigned s = 2; s <= 4; ++s) {
      for (unsigned d = 1; d <= s; ++d) {
        const LinearCode code = build_projective_toric(f, s, d);
        const LinearCode dual = build_projective_dual_code(f, s, d);
        EXPECT_FALSE(dual.rank_defect());
        EXPECT_EQ(dual.generator(), nullspace(code.generator(), *f)) << "q=" << q << " s=" << s << " d=" << d;
      }
    }
  }
}
