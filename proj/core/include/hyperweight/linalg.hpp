#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperweight/gf.hpp"

namespace hyperweight {

// Dense row-major matrix of field elements. The matrix does not carry its
// field; operations take the Field explicitly and reject reps >= q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix from_rows(const std::vector<std::vector<FieldElement>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  FieldElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FieldElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const FieldElement> values);
  /// First `count` rows as a new matrix.
  Matrix top_rows(std::size_t count) const;
  std::vector<std::vector<FieldElement>> to_rows() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  Matrix matrix;  // same shape as the input; zero rows at the bottom
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m, const Field& field);
std::size_t rank(const Matrix& m, const Field& field);

/// RREF basis of {x : m * x^T = 0}; has cols - rank rows.
Matrix nullspace(const Matrix& m, const Field& field);

/// Row vector times matrix.
std::vector<FieldElement> row_times(std::span<const FieldElement> v, const Matrix& m, const Field& field);

FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b, const Field& field);

}  // namespace hyperweight
