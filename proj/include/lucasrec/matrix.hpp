#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lucasrec/error.hpp"
#include "lucasrec/ring.hpp"

namespace lucasrec {

/// Dense square matrix over a coefficient ring, row-major.
template <CommutativeRing T>
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, T(Integer(0))) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Integer(1));
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw Error(ErrorKind::DomainError, "matrix is not square");
      for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t size() const noexcept { return n_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  T trace() const {
    T sum(Integer(0));
    for (std::size_t i = 0; i < n_; ++i) sum = sum + (*this)(i, i);
    return sum;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != n_) throw Error(ErrorKind::DomainError, "vector length mismatch");
    std::vector<T> out(n_, T(Integer(0)));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (!is_zero((*this)(i, j))) out[i] = out[i] + (*this)(i, j) * v[j];
      }
    }
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.n_ != b.n_) throw Error(ErrorKind::DomainError, "matrix size mismatch");
    Matrix out(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      for (std::size_t k = 0; k < a.n_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < a.n_; ++j) out(i, j) = out(i, j) + aik * b(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<T> data_;
};

/// M^exponent by binary exponentiation; M^0 is the identity.
template <CommutativeRing T>
Matrix<T> mat_pow(const Matrix<T>& m, std::uint64_t exponent) {
  Matrix<T> result = Matrix<T>::identity(m.size());
  Matrix<T> square = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

}  // namespace lucasrec
