#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "slocc/arith/fp.hpp"
#include "slocc/arith/rational.hpp"

namespace slocc {

/// Dense row-major matrix over an exact field (Rational or Fp). The matrix
/// remembers the zero of its field so that F_p matrices can mint constants.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T zero = T{})
      : rows_(rows), cols_(cols), zero_(zero_like(zero)), data_(rows * cols, zero_) {}

  /// Builds from nested rows; every row must have the same length.
  static Matrix from_rows(const std::vector<std::vector<T>>& rows, T zero = T{}) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), c, rows.empty() || c == 0 ? zero : rows.front().front());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix identity(std::size_t n, T zero = T{}) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one_like(m.zero_);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const T& zero() const noexcept { return zero_; }
  T one() const { return one_like(zero_); }

  T& operator()(std::size_t i, std::size_t j) {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }
  const T& operator()(std::size_t i, std::size_t j) const {
    assert(i < rows_ && j < cols_);
    return data_[i * cols_ + j];
  }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  const std::vector<T>& data() const noexcept { return data_; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  void append_row(std::span<const T> values) {
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Keeps the first n rows.
  Matrix top_rows(std::size_t n) const {
    Matrix t(n, cols_, zero_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(n * cols_), t.data_.begin());
    return t;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_, a.zero_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix c = a;
    for (std::size_t k = 0; k < c.data_.size(); ++k) c.data_[k] += b.data_[k];
    return c;
  }

  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x *= s;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  T zero_{};
  std::vector<T> data_;
};

template <class T>
struct RrefResult {
  std::size_t rank = 0;
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // strictly increasing
};

/// Gauss-Jordan elimination to the canonical reduced row-echelon form.
template <class T>
RrefResult<T> rref(Matrix<T> m) {
  RrefResult<T> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && is_zero(m(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    m.swap_rows(r, piv);
    const T scale = inverse(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= scale;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).rank;
}

/// Exact determinant by elimination; square input only.
template <class T>
T determinant(Matrix<T> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  T det = m.one();
  const std::size_t n = m.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && is_zero(m(piv, c))) ++piv;
    if (piv == n) return m.zero();
    if (piv != c) {
      m.swap_rows(c, piv);
      det = -det;
    }
    det *= m(c, c);
    const T inv = inverse(m(c, c));
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      const T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Linear subspace of T^ambient, stored as its unique RREF basis.
template <class T>
class Subspace {
 public:
  Subspace() = default;

  /// Row span of m.
  static Subspace row_span(const Matrix<T>& m) {
    auto r = rref(m);
    Subspace s;
    s.ambient_ = m.cols();
    s.basis_ = r.reduced.top_rows(r.rank);
    return s;
  }
  static Subspace column_span(const Matrix<T>& m) { return row_span(m.transpose()); }

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix<T>& basis() const noexcept { return basis_; }

  bool contains(std::span<const T> v) const {
    Matrix<T> m = basis_;
    m.append_row(v);
    return rank(m) == dim();
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix<T> basis_;
};

/// Null space {v : m v = 0}; dim = cols - rank.
template <class T>
Subspace<T> kernel(const Matrix<T>& m) {
  const auto r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix<T> gens(0, m.cols(), m.zero());
  std::vector<T> v(m.cols(), m.zero());
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::fill(v.begin(), v.end(), m.zero());
    v[f] = m.one();
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.reduced(i, f);
    gens.append_row(v);
  }
  if (gens.rows() == 0) {
    Matrix<T> empty(0, m.cols(), m.zero());
    return Subspace<T>::row_span(empty);
  }
  return Subspace<T>::row_span(gens);
}

}  // namespace slocc
