/*
   Copyright 2026 The loopvir Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LOOPVIR_LINALG_HPP
#define LOOPVIR_LINALG_HPP

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "scalar.hpp"

namespace loopvir {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  Matrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      for (long v : row) data_.emplace_back(v);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const { return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_); }

  void append_row(const Vector& v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  /// Stacks the rows of another matrix with the same column count.
  void append_rows(const Matrix& m) {
    if (m.rows_ == 0) return;
    if (rows_ == 0 && cols_ == 0) cols_ = m.cols_;
    if (m.cols_ != cols_) throw std::invalid_argument("column count mismatch");
    data_.insert(data_.end(), m.data_.begin(), m.data_.end());
    rows_ += m.rows_;
  }

  Vector operator*(const Vector& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a(i, k);
        if (sgn(aik) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (sgn(b(k, j)) != 0) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form; pivots are the first nonzero entries in column
/// order, strictly increasing.
inline RrefResult rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      using std::swap;
      for (std::size_t c = 0; c < m.cols(); ++c) swap(m(p, c), m(row, c));
    }

    Scalar inv = 1 / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c)
      if (sgn(m(row, c)) != 0) m(row, c) *= inv;

    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Scalar f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

/// The nonzero rows of the reduced form: a basis of the row space.
inline Matrix row_space(const Matrix& m) {
  auto [reduced, pivots] = rref(m);
  Matrix out(0, m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) out.append_row(reduced.row(r));
  return out;
}

/// Basis of the right null space, one vector per free column, each scaled so
/// its first nonzero entry is 1.
inline std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
    for (const auto& x : v)
      if (sgn(x) != 0) {
        Scalar lead = x;
        for (auto& y : v) y /= lead;
        break;
      }
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, or nothing when the system is inconsistent.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side has wrong length");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto [reduced, pivots] = rref(std::move(aug));
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  Vector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = reduced(r, m.cols());
  return x;
}

inline bool is_zero_vector(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

}  // namespace loopvir

#endif  // LOOPVIR_LINALG_HPP
