#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gon/errors.hpp"

namespace gon {

// Dense row-major matrix over an arbitrary element type.
template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n, const E& zero, const E& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<E>>& cols) {
    if (cols.empty()) throw InvalidArgument("matrix needs at least one column");
    Matrix m(cols[0].size(), cols.size(), cols[0].empty() ? E{} : cols[0][0]);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw InvalidArgument("ragged column list");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  E& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const E& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<E> column(std::size_t j) const {
    std::vector<E> c;
    c.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }
  void swap_columns(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  // column dst -= q * column src
  void sub_column(std::size_t dst, std::size_t src, const E& q) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) -= q * (*this)(i, src);
  }
  void sub_row(std::size_t dst, std::size_t src, const E& q) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) -= q * (*this)(src, j);
  }
  void scale_column(std::size_t j, const E& u) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * u;
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> a_;
};

template <class E>
Matrix<E> mat_mul(const Matrix<E>& a, const Matrix<E>& b, const E& zero) {
  if (a.cols() != b.rows()) throw InvalidArgument("matrix dimension mismatch");
  Matrix<E> c(a.rows(), b.cols(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
  return c;
}

template <class E>
std::vector<E> mat_vec(const Matrix<E>& a, const std::vector<E>& x, const E& zero) {
  if (a.cols() != x.size()) throw InvalidArgument("matrix-vector dimension mismatch");
  std::vector<E> y(a.rows(), zero);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

}  // namespace gon
