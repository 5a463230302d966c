#pragma once

#include <Eigen/Dense>

#include <cassert>
#include <cstddef>
#include <vector>

#include "iet/exact.hpp"

namespace iet {

// Small dense square matrix over an exact ring (BigInt or Rational).
// Row-major; sized d x d with d tiny (the alphabet size).
template <class T>
class SquareMat {
 public:
  SquareMat() : d_(0) {}
  explicit SquareMat(std::size_t d) : d_(d), a_(d * d, T(0)) {}

  static SquareMat identity(std::size_t d) {
    SquareMat m(d);
    for (std::size_t i = 0; i < d; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t dim() const { return d_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * d_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const {
    return a_[i * d_ + j];
  }

  bool operator==(const SquareMat& o) const {
    return d_ == o.d_ && a_ == o.a_;
  }

  SquareMat operator*(const SquareMat& o) const {
    assert(d_ == o.d_);
    SquareMat r(d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t k = 0; k < d_; ++k) {
        const T& x = (*this)(i, k);
        if (x == T(0)) continue;
        for (std::size_t j = 0; j < d_; ++j) r(i, j) += x * o(k, j);
      }
    return r;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    assert(v.size() == d_);
    std::vector<T> r(d_, T(0));
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) r[i] += (*this)(i, j) * v[j];
    return r;
  }

  SquareMat transposed() const {
    SquareMat r(d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  // In-place right multiplication by (I + E_{win,lose}): col[lose] += col[win].
  void add_col(std::size_t from, std::size_t to) {
    for (std::size_t i = 0; i < d_; ++i) (*this)(i, to) += (*this)(i, from);
  }

  T sum_norm() const {  // sum of |entries|
    T s(0);
    for (const T& x : a_) s += x >= T(0) ? x : T(-x);
    return s;
  }
  T sup_norm() const {  // max |entry|
    T s(0);
    for (const T& x : a_) {
      T ax = x >= T(0) ? x : T(-x);
      if (ax > s) s = ax;
    }
    return s;
  }
  T col_sum(std::size_t j) const {
    T s(0);
    for (std::size_t i = 0; i < d_; ++i) s += (*this)(i, j);
    return s;
  }
  T max_col_sum() const {
    T best(0);
    for (std::size_t j = 0; j < d_; ++j) {
      T s = col_sum(j);
      if (s > best) best = s;
    }
    return best;
  }

  bool all_positive() const {
    for (const T& x : a_)
      if (!(x > T(0))) return false;
    return true;
  }

 private:
  std::size_t d_;
  std::vector<T> a_;
};

using IMat = SquareMat<BigInt>;
using QMat = SquareMat<Rational>;

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_exact(const IMat& m);

// Characteristic polynomial coefficients c_0..c_d of det(X I - M),
// c_d = 1, exact (via integer evaluation + exact interpolation).
std::vector<BigInt> char_poly(const IMat& m);

// Conversions to double-precision Eigen matrices. `log_scale` receives
// ln(max entry); the returned matrix is the input divided by max entry so
// that deep cocycle products stay representable.
Eigen::MatrixXd to_eigen(const IMat& m);
Eigen::MatrixXd to_eigen_scaled(const IMat& m, double* log_scale);

IMat int_mat_from_rows(const std::vector<std::vector<long>>& rows);

}  // namespace iet
