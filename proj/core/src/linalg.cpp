#include "hyperweight/linalg.hpp"

#include <string>

#include "hyperweight/error.hpp"

namespace hyperweight {
namespace {

void check_reps(const Matrix& m, const Field& field) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (FieldElement x : m.row(r)) {
      if (x.rep >= field.q()) {
        throw Error(ErrorCode::kFieldMismatch,
                    "entry " + std::to_string(x.rep) + " is not an element of F_" + std::to_string(field.q()));
      }
    }
  }
}

}  // namespace

Matrix Matrix::from_rows(const std::vector<std::vector<FieldElement>>& rows) {
  if (rows.empty()) return {};
  Matrix out(0, rows.front().size());
  for (const auto& r : rows) out.append_row(r);
  return out;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = FieldElement{1};
  return out;
}

void Matrix::append_row(std::span<const FieldElement> values) {
  if (rows_ == 0 && data_.empty() && cols_ == 0) cols_ = values.size();
  if (values.size() != cols_) {
    throw Error(ErrorCode::kDimensionMismatch,
                "row of length " + std::to_string(values.size()) + " appended to " + std::to_string(cols_) +
                    "-column matrix");
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Matrix Matrix::top_rows(std::size_t count) const {
  Matrix out(count, cols_);
  std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_), out.data_.begin());
  return out;
}

std::vector<std::vector<FieldElement>> Matrix::to_rows() const {
  std::vector<std::vector<FieldElement>> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

RrefResult rref(const Matrix& m, const Field& field) {
  check_reps(m, field);
  RrefResult out{m, 0, {}};
  Matrix& a = out.matrix;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < a.cols() && pivot_row < a.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < a.rows() && a(sel, col).rep == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != pivot_row) {
      auto x = a.row(sel);
      auto y = a.row(pivot_row);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    const FieldElement scale = field.inv(a(pivot_row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a(pivot_row, c) = field.mul(a(pivot_row, c), scale);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == pivot_row || a(r, col).rep == 0) continue;
      const FieldElement factor = field.neg(a(r, col));
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (a(pivot_row, c).rep != 0) a(r, c) = field.add(a(r, c), field.mul(factor, a(pivot_row, c)));
      }
    }
    out.pivots.push_back(col);
    ++pivot_row;
  }
  out.rank = pivot_row;
  return out;
}

std::size_t rank(const Matrix& m, const Field& field) { return rref(m, field).rank; }

Matrix nullspace(const Matrix& m, const Field& field) {
  const RrefResult red = rref(m, field);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : red.pivots) is_pivot[c] = true;

  Matrix basis(0, n);
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(n);
    v[free] = field.one();
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = field.neg(red.matrix(i, free));
    basis.append_row(v);
  }
  if (basis.rows() == 0) return Matrix(0, n);
  return rref(basis, field).matrix;
}

std::vector<FieldElement> row_times(std::span<const FieldElement> v, const Matrix& m, const Field& field) {
  if (v.size() != m.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length does not match matrix rows");
  }
  std::vector<FieldElement> out(m.cols());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].rep == 0) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] = field.add(out[c], field.mul(v[i], m(i, c)));
  }
  return out;
}

FieldElement dot(std::span<const FieldElement> a, std::span<const FieldElement> b, const Field& field) {
  if (a.size() != b.size()) throw Error(ErrorCode::kDimensionMismatch, "dot product of unequal lengths");
  FieldElement acc = field.zero();
  for (std::size_t i = 0; i < a.size(); ++i) acc = field.add(acc, field.mul(a[i], b[i]));
  return acc;
}

}  // namespace hyperweight
