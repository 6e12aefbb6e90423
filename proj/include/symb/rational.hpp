#pragma once

// Exact rational scalars and small dense square matrices over them.

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "symb/error.hpp"

namespace symb {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline Integer floor_integer(const Rational& q) {
  const Integer n = boost::multiprecision::numerator(q);
  const Integer d = boost::multiprecision::denominator(q);
  Integer f = n / d;  // truncates toward zero
  if (n < 0 && f * d != n) --f;
  return f;
}

/// q - floor(q), in [0, 1).
inline Rational mod1(const Rational& q) { return q - Rational(floor_integer(q)); }

class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n) : n_(n), entries_(n * n) {}

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const noexcept { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

  RationalMatrix transpose() const {
    RationalMatrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  std::vector<Rational> apply(const std::vector<Rational>& x) const {
    detail::require(x.size() == n_, ErrorKind::DimensionMismatch, "vector size does not match matrix");
    std::vector<Rational> y(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) y[i] += (*this)(i, j) * x[j];
    return y;
  }

  Rational determinant() const {
    RationalMatrix m = *this;
    Rational det = 1;
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && m(p, c) == 0) ++p;
      if (p == n_) return 0;
      if (p != c) {
        m.swap_rows(p, c);
        det = -det;
      }
      det *= m(c, c);
      for (std::size_t r = c + 1; r < n_; ++r) {
        if (m(r, c) == 0) continue;
        const Rational f = m(r, c) / m(c, c);
        for (std::size_t k = c; k < n_; ++k) m(r, k) -= f * m(c, k);
      }
    }
    return det;
  }

  /// Gauss-Jordan; throws InvalidArgument on a singular matrix.
  RationalMatrix inverse() const {
    RationalMatrix m = *this;
    RationalMatrix inv = identity(n_);
    for (std::size_t c = 0; c < n_; ++c) {
      std::size_t p = c;
      while (p < n_ && m(p, c) == 0) ++p;
      detail::require(p < n_, ErrorKind::InvalidArgument, "matrix is singular");
      m.swap_rows(p, c);
      inv.swap_rows(p, c);
      const Rational pivot = m(c, c);
      for (std::size_t k = 0; k < n_; ++k) {
        m(c, k) /= pivot;
        inv(c, k) /= pivot;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == c || m(r, c) == 0) continue;
        const Rational f = m(r, c);
        for (std::size_t k = 0; k < n_; ++k) {
          m(r, k) -= f * m(c, k);
          inv(r, k) -= f * inv(c, k);
        }
      }
    }
    return inv;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    detail::require(a.n_ == b.n_, ErrorKind::DimensionMismatch, "matrix sizes differ");
    RationalMatrix c(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i)
      for (std::size_t k = 0; k < a.n_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < a.n_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(a, k), (*this)(b, k));
  }

  std::size_t n_;
  std::vector<Rational> entries_;
};

}  // namespace symb
