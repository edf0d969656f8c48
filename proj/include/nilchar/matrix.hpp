#ifndef NILCHAR_MATRIX_HPP
#define NILCHAR_MATRIX_HPP

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "nilchar/errors.hpp"
#include "nilchar/param_poly.hpp"
#include "nilchar/rational.hpp"

namespace nilchar {

/// Dense row-major matrix over a coefficient field (Rational or ParamRatFunc).
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F::one();
    return m;
  }

  /// Builds a matrix whose rows are the given vectors (all of length `cols`).
  static Matrix from_rows(const std::vector<std::vector<F>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw MathError("matrix row has wrong length");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  F& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<F> row(std::size_t i) const {
    return std::vector<F>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<std::vector<F>> row_vectors() const {
    std::vector<std::vector<F>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<F> operator*(std::span<const F> v) const {
    if (v.size() != cols_) throw MathError("matrix-vector dimension mismatch");
    std::vector<F> out(rows_, F::zero());
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw MathError("matrix product dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

/// Reduced row-echelon form and the pivot columns; rank = pivots.size().
template <class F>
std::pair<Matrix<F>, std::vector<std::size_t>> rref(Matrix<F> m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const F inv = F::one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      const F factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
  return rref(m).second.size();
}

/// Basis of the right kernel {v : m v = 0}, one vector per free column.
template <class F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Unique x with m x = b for square invertible m; throws MathError if singular.
template <class F>
std::vector<F> solve(const Matrix<F>& m, std::span<const F> b) {
  if (m.rows() != m.cols() || b.size() != m.rows()) throw MathError("solve: shape mismatch");
  Matrix<F> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() != m.cols() || (!pivots.empty() && pivots.back() >= m.cols()))
    throw MathError("solve: singular system");
  std::vector<F> x(m.cols());
  for (std::size_t i = 0; i < m.cols(); ++i) x[i] = r(i, m.cols());
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (m.rows() != m.cols()) throw MathError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F::one();
  }
  auto [r, pivots] = rref(std::move(aug));
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw MathError("inverse of a singular matrix");
  Matrix<F> out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = r(i, n + j);
  return out;
}

/// Multiplies a Q(t)-vector by the lcm of its denominators and divides out the
/// polynomial gcd and rational content, giving a primitive Q[t]-vector whose
/// first nonzero entry has positive leading coefficient.
std::vector<ParamPoly> clear_denominators(std::span<const ParamRatFunc> v);

using QMatrix = Matrix<Rational>;
using QVector = std::vector<Rational>;

}  // namespace nilchar

#endif
