#pragma once

// Small dense matrices over the Laurent ring, for invertibility checks and
// pairing inverses.

#include <cstddef>
#include <utility>
#include <vector>

#include "qqsh/error.hpp"
#include "qqsh/scalar.hpp"

namespace qqsh {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw domain_error("matrix product: shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k).is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend bool operator==(const Matrix&, const Matrix&) = default;

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix minor_matrix(std::size_t skip_row, std::size_t skip_col) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == skip_row) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == skip_col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Determinant by fraction-free (Bareiss) elimination; every division is
/// exact in the Laurent ring.
inline Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw domain_error("determinant: matrix not square");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  Scalar sign = 1;
  Scalar prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m(p, k).is_zero()) ++p;
      if (p == n) return {};
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Scalar num = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = divide_exact(num, prev, "Bareiss elimination: inexact division");
      }
      m(i, k) = Scalar();
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

/// Inverse over the Laurent ring (adjugate / determinant). Throws when the
/// determinant is zero or the quotient leaves the Laurent ring.
inline Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse: matrix not square");
  std::size_t n = m.rows();
  Scalar det = determinant(m);
  if (det.is_zero()) throw domain_error("matrix is singular");
  Matrix inv(n, n);
  if (n == 1) {
    inv(0, 0) = divide_exact(1, det, "inverse is not a Laurent polynomial");
    return inv;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar cof = determinant(m.minor_matrix(j, i));
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = divide_exact(cof, det, "inverse is not a Laurent polynomial");
    }
  return inv;
}

}  // namespace qqsh
