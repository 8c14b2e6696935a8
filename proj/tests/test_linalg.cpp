#include <random>

#include <gtest/gtest.h>

#include "hyperweight/error.hpp"
#include "hyperweight/linalg.hpp"

using namespace hyperweight;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::uint32_t q) {
  Matrix m(rows, cols);
  std::uniform_int_distribution<std::uint32_t> dist(0, q - 1);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = {dist(rng)};
  return m;
}

}  // namespace

TEST(Linalg, RrefShapeAndPivots) {
  const auto f = make_field(5);
  const Matrix m = Matrix::from_rows({{{0}, {2}, {4}}, {{1}, {1}, {1}}, {{2}, {4}, {1}}});
  const RrefResult r = rref(m, *f);
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.matrix(0, 0), f->one());
  EXPECT_EQ(r.matrix(1, 1), f->one());
  EXPECT_EQ(r.matrix(0, 1), f->zero());
  for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(r.matrix(2, c), f->zero());
}

TEST(Linalg, RrefIsIdempotent) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 8u, 9u}) {
    const auto f = make_field(q);
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix m = random_matrix(rng, 1 + trial % 6, 2 + trial % 7, q);
      const RrefResult once = rref(m, *f);
      const RrefResult twice = rref(once.matrix, *f);
      EXPECT_EQ(once.matrix, twice.matrix);
      EXPECT_EQ(once.rank, rank(m, *f));
    }
  }
}

TEST(Linalg, NullspaceIsOrthogonalAndComplete) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u}) {
    const auto f = make_field(q);
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t rows = 1 + trial % 5, cols = 3 + trial % 6;
      const Matrix m = random_matrix(rng, rows, cols, q);
      const Matrix n = nullspace(m, *f);
      const std::size_t rk = rank(m, *f);
      EXPECT_EQ(n.rows(), cols - rk);
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < n.rows(); ++j) EXPECT_EQ(dot(m.row(i), n.row(j), *f), f->zero());
      if (n.rows() == 0) continue;
      // Double dual recovers the row space.
      const Matrix back = nullspace(n, *f);
      EXPECT_EQ(back, rref(m, *f).matrix.top_rows(rk));
    }
  }
}

TEST(Linalg, RowTimes) {
  const auto f = make_field(3);
  const Matrix m = Matrix::from_rows({{{1}, {0}, {2}}, {{0}, {1}, {1}}});
  const std::vector<FieldElement> v{{2}, {1}};
  EXPECT_EQ(row_times(v, m, *f), (std::vector<FieldElement>{{2}, {1}, {2}}));
  EXPECT_THROW(row_times(std::vector<FieldElement>{{1}}, m, *f), Error);
}

TEST(Linalg, RejectsOutOfFieldEntries) {
  const auto f = make_field(3);
  const Matrix m = Matrix::from_rows({{{5}, {0}}});
  EXPECT_THROW(rref(m, *f), Error);
}

TEST(Linalg, EmptyAndIdentity) {
  const auto f = make_field(7);
  EXPECT_EQ(rank(Matrix::identity(4), *f), 4u);
  EXPECT_EQ(nullspace(Matrix::identity(4), *f).rows(), 0u);
  EXPECT_EQ(rank(Matrix(0, 5), *f), 0u);
}
