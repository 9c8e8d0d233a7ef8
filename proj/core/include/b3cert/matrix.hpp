#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "b3cert/cyclotomic.hpp"
#include "b3cert/laurent.hpp"

namespace b3cert {

inline bool scalar_is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
inline bool scalar_is_zero(const LaurentPoly& x) { return x.is_zero(); }
inline bool scalar_is_zero(const std::complex<double>& x) { return x == 0.0; }

/// Dense row-major matrix over an exact ring (or complex doubles).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  template <class F>
  auto map(F f) const {
    using U = decltype(f(std::declval<const T&>()));
    Matrix<U> out(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (scalar_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (scalar_is_zero(b(k, j))) continue;
          out(i, j) += x * b(k, j);
        }
      }
    return out;
  }
  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& x : m.data_) x = s * x;
    return m;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!scalar_is_zero(x)) return false;
    return true;
  }

  /// lambda * identity for some lambda (possibly zero).
  bool is_scalar() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) {
        if (i != j && !scalar_is_zero((*this)(i, j))) return false;
        if (i == j && !((*this)(i, i) == (*this)(0, 0))) return false;
      }
    return true;
  }

 private:
  void check_same(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<CyclotomicNumber>;
using LaurentMatrix = Matrix<LaurentPoly>;
using ComplexMatrix = Matrix<std::complex<double>>;

template <class T>
T det2(const Matrix<T>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("det2 needs a 2x2 matrix");
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

template <class T>
Matrix<T> adjugate2(const Matrix<T>& m) {
  if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("adjugate2 needs a 2x2 matrix");
  return Matrix<T>{{m(1, 1), -m(0, 1)}, {-m(1, 0), m(0, 0)}};
}

template <class T>
Matrix<T> inverse2(const Matrix<T>& m) {
  const T d = det2(m);
  if (scalar_is_zero(d)) throw std::domain_error("singular 2x2 matrix");
  const T inv = T(1) / d;
  return inv * adjugate2(m);
}

/// M = lambda N for some nonzero lambda, decided by cross-multiplication.
template <class T>
bool projective_equal(const Matrix<T>& m, const Matrix<T>& n) {
  if (m.rows() != n.rows() || m.cols() != n.cols()) return false;
  std::size_t pivot = 0;
  const auto& nd = n.data();
  const auto& md = m.data();
  while (pivot < nd.size() && scalar_is_zero(nd[pivot])) ++pivot;
  if (pivot == nd.size()) return m.is_zero();
  if (scalar_is_zero(md[pivot])) return false;
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (!(md[i] * nd[pivot] == nd[i] * md[pivot])) return false;
  }
  return true;
}

/// Representative with first nonzero entry equal to 1.
template <class T>
Matrix<T> projective_normalize(const Matrix<T>& m) {
  const auto& d = m.data();
  std::size_t pivot = 0;
  while (pivot < d.size() && scalar_is_zero(d[pivot])) ++pivot;
  if (pivot == d.size()) return m;
  return (T(1) / d[pivot]) * m;
}

template <class T>
Matrix<T> matrix_pow(Matrix<T> base, long e) {
  if (e < 0) throw std::invalid_argument("matrix_pow: negative exponent");
  Matrix<T> result = Matrix<T>::identity(base.rows());
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

}  // namespace b3cert
