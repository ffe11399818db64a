#pragma once

#include <algorithm>
#include <cassert>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "mps/errors.hpp"

namespace mps {

using Complex = std::complex<double>;

/// Dense row-major matrix. Shape checks on arithmetic throw InvalidArgument.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }
  static Matrix ones(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, T{1}); }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

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
  std::span<const T> values() const noexcept { return data_; }
  std::span<T> values() noexcept { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorCode::InvalidArgument, "block out of range");
    Matrix b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_)
      throw Error(ErrorCode::InvalidArgument, "block out of range");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::InvalidArgument, "matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::InvalidArgument, "shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CMatrix = Matrix<Complex>;
using IntMatrix = Matrix<long long>;

inline CMatrix adjoint(const CMatrix& m) {
  CMatrix a(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a(j, i) = std::conj(m(i, j));
  return a;
}

template <class From>
CMatrix to_complex(const Matrix<From>& m) {
  CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = Complex(static_cast<double>(m(i, j)), 0.0);
  return c;
}

/// Stacks [a b; c d]. Block shapes must be compatible.
template <class T>
Matrix<T> block_matrix(const Matrix<T>& a, const Matrix<T>& b, const Matrix<T>& c, const Matrix<T>& d) {
  if (a.rows() != b.rows() || c.rows() != d.rows() || a.cols() != c.cols() || b.cols() != d.cols())
    throw Error(ErrorCode::InvalidArgument, "incompatible block shapes");
  Matrix<T> m(a.rows() + c.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  m.set_block(a.rows(), 0, c);
  m.set_block(a.rows(), a.cols(), d);
  return m;
}

}  // namespace mps
