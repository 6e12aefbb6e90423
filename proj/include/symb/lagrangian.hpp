#pragma once

// Upper bounds from Lagrangian folding. A shape is viewed as a product of a
// box in the base and a simplex or box in the fiber; an integer-coprime
// matrix wraps the base box injectively around the torus, and its
// inverse transpose acts on the fiber. Matrix work is exact; conversion to
// double happens only when a Bound is formed.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "symb/domain.hpp"
#include "symb/rational.hpp"

namespace symb {

namespace detail {

inline void require_positive_ks(std::span<const long long> ks, long long minimum) {
  require(!ks.empty(), ErrorKind::InvalidK, "k-vector must not be empty");
  for (long long k : ks) {
    require(k >= minimum, ErrorKind::InvalidK,
            "k = " + std::to_string(k) + " below minimum " + std::to_string(minimum));
  }
}

inline long long k_product(std::span<const long long> ks) {
  return std::accumulate(ks.begin(), ks.end(), 1LL, std::multiplies<>());
}

inline KVectorCertificate certificate_of(std::span<const long long> ks) {
  return KVectorCertificate{std::vector<long long>(ks.begin(), ks.end())};
}

}  // namespace detail

/// True iff gcd(k_i, k_j) = 1 for all i < j. Entries must be >= 1.
inline bool pairwise_coprime(std::span<const long long> ks) {
  for (long long k : ks) detail::require(k >= 1, ErrorKind::InvalidK, "k must be >= 1");
  for (std::size_t i = 0; i < ks.size(); ++i)
    for (std::size_t j = i + 1; j < ks.size(); ++j)
      if (std::gcd(ks[i], ks[j]) != 1) return false;
  return true;
}

inline bool pairwise_coprime(std::initializer_list<long long> ks) {
  return pairwise_coprime(std::span<const long long>(ks.begin(), ks.size()));
}

/// min_k max(k + 1, a/k): E(1, a) into a four-ball with a single k.
inline Bound ellipsoid_ball_lagrangian_bound(double a) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "ellipsoid parameter must be >= 1");
  // k with (k - 1)(k + 1) <= a <= k(k + 2)
  auto k = static_cast<long long>(std::floor(std::sqrt(a + 1)));
  while (k > 1 && static_cast<double>((k - 1) * (k + 1)) > a) --k;
  while (static_cast<double>(k * (k + 2)) < a) ++k;
  const double kd = static_cast<double>(k);
  const double value = a <= static_cast<double>(k * (k + 1)) ? kd + 1 : a / kd;
  return Bound(value, Direction::Upper, Method::LagrangianM, KVectorCertificate{{k}});
}

/// min_k max(k, a/k + 1): P(1, a) into a four-cube with a single k.
inline Bound polydisc_cube_lagrangian_bound(double a) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "polydisc parameter must be >= 1");
  // k = ceil(sqrt(a)), corrected for rounding
  auto k = static_cast<long long>(std::ceil(std::sqrt(a)));
  while (k > 1 && static_cast<double>((k - 1) * (k - 1)) >= a) --k;
  while (static_cast<double>(k * k) < a) ++k;
  const double kd = static_cast<double>(k);
  const double value = a <= static_cast<double>(k * (k - 1)) ? kd : a / kd + 1;
  return Bound(value, Direction::Upper, Method::LagrangianM, KVectorCertificate{{k}});
}

/// E^{2n}(1, ..., 1, a) into B^{2n}(max(k_max + 1, a / prod k)), n - 1 = ks.size().
inline Bound ball_bound_M(std::span<const long long> ks, double a) {
  detail::require_positive_ks(ks, 1);
  detail::require(pairwise_coprime(ks), ErrorKind::NotCoprime, "ks must be pairwise coprime");
  detail::require(a > 0.0, ErrorKind::NonPositiveEntry, "a must be positive");
  const double largest = static_cast<double>(*std::max_element(ks.begin(), ks.end()));
  const double value = std::max(largest + 1, a / static_cast<double>(detail::k_product(ks)));
  return Bound(value, Direction::Upper, Method::LagrangianM, detail::certificate_of(ks));
}

/// P^{2n}(1, ..., 1, a) into C^{2n}(max(k_max, n - 1 + a / prod k)).
inline Bound cube_bound_M(std::span<const long long> ks, double a) {
  detail::require_positive_ks(ks, 1);
  detail::require(pairwise_coprime(ks), ErrorKind::NotCoprime, "ks must be pairwise coprime");
  detail::require(a > 0.0, ErrorKind::NonPositiveEntry, "a must be positive");
  const double largest = static_cast<double>(*std::max_element(ks.begin(), ks.end()));
  const double n_minus_1 = static_cast<double>(ks.size());
  const double value = std::max(largest, n_minus_1 + a / static_cast<double>(detail::k_product(ks)));
  return Bound(value, Direction::Upper, Method::LagrangianM, detail::certificate_of(ks));
}

/// Identity with last column (-1/k_1, ..., -1/k_{n-1}, 1).
inline RationalMatrix m_matrix(std::span<const long long> ks) {
  detail::require_positive_ks(ks, 1);
  const std::size_t n = ks.size() + 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, n - 1) = Rational(-1, ks[i]);
  return m;
}

/// Inverse transpose of m_matrix: identity with last row (1/k_1, ..., 1/k_{n-1}, 1).
inline RationalMatrix m_star_matrix(std::span<const long long> ks) {
  detail::require_positive_ks(ks, 1);
  const std::size_t n = ks.size() + 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t j = 0; j + 1 < n; ++j) m(n - 1, j) = Rational(1, ks[j]);
  return m;
}

/// Upper bidiagonal, superdiagonal (-1/k_2, ..., -1/k_n). Wraps
/// box(1/(k_2 ... k_n), k_2, ..., k_n) injectively around the torus.
inline RationalMatrix n_matrix(std::span<const long long> ks) {
  detail::require_positive_ks(ks, 2);
  const std::size_t n = ks.size() + 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = Rational(-1, ks[i]);
  return m;
}

/// Lower unitriangular fiber matrix used by the N-construction. With ks =
/// (k_2, ..., k_n), entry (i, j), i > j (1-based), is
/// (-1)^{i-j+1} / (k_{j+1} ... k_i).
inline RationalMatrix n_star_matrix(std::span<const long long> ks) {
  detail::require_positive_ks(ks, 2);
  const std::size_t n = ks.size() + 1;
  RationalMatrix m = RationalMatrix::identity(n);
  for (std::size_t i = 1; i < n; ++i) {
    Integer denom = 1;
    for (std::size_t j = i; j-- > 0;) {
      denom *= ks[j];  // ks[j..i-1] holds k_{j+2} .. k_{i+1}
      const int sign = (i - j) % 2 == 1 ? 1 : -1;
      m(i, j) = Rational(Integer(sign), denom);
    }
  }
  return m;
}

namespace detail {

/// n_star_matrix with column 1 scaled by prod k and column i by a_i / k_i.
inline RationalMatrix scaled_n_star(std::span<const long long> ks, std::span<const Rational> a_rest) {
  require_positive_ks(ks, 2);
  require(ks.size() >= 2, ErrorKind::InvalidArgument, "the N-construction needs n >= 3");
  require(a_rest.size() == ks.size(), ErrorKind::DimensionMismatch,
          "need one parameter per k, got " + std::to_string(a_rest.size()) + " for " +
              std::to_string(ks.size()));
  for (const auto& x : a_rest) require(x > 0, ErrorKind::NonPositiveEntry, "parameters must be positive");
  RationalMatrix m = n_star_matrix(ks);
  const std::size_t n = m.size();
  std::vector<Rational> scale(n);
  scale[0] = Rational(k_product(ks));
  for (std::size_t j = 1; j < n; ++j) scale[j] = a_rest[j - 1] / ks[j - 1];
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) *= scale[j];
  return m;
}

inline std::vector<Rational> to_rationals(std::span<const double> xs) {
  std::vector<Rational> out;
  out.reserve(xs.size());
  for (double x : xs) {
    require(x > 0.0, ErrorKind::NonPositiveEntry, "parameters must be positive");
    out.emplace_back(x);
  }
  return out;
}

}  // namespace detail

/// Exact capacity A for E(1, a_2, ..., a_n) into B^{2n}(A). The columns of
/// the scaled fiber matrix are the nonzero vertices of the image simplex;
/// each row is shifted so its smallest coordinate (origin included) is 0,
/// then the largest coordinate sum over all vertices is taken.
inline Rational ball_bound_N_exact(std::span<const long long> ks, std::span<const Rational> a_rest) {
  RationalMatrix m = detail::scaled_n_star(ks, a_rest);
  const std::size_t n = m.size();
  Rational origin_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Rational lowest = 0;
    for (std::size_t j = 0; j < n; ++j) lowest = std::min(lowest, m(i, j));
    for (std::size_t j = 0; j < n; ++j) m(i, j) -= lowest;
    origin_sum -= lowest;
  }
  Rational best = origin_sum;
  for (std::size_t j = 0; j < n; ++j) {
    Rational column = 0;
    for (std::size_t i = 0; i < n; ++i) column += m(i, j);
    best = std::max(best, column);
  }
  return best;
}

inline Bound ball_bound_N(std::span<const long long> ks, std::span<const double> a_rest) {
  const auto exact = detail::to_rationals(a_rest);
  const Rational value = ball_bound_N_exact(ks, exact);
  return Bound(value.convert_to<double>(), Direction::Upper, Method::LagrangianN, detail::certificate_of(ks));
}

/// Exact target factors (A_1, ..., A_n) for P(1, a_2, ..., a_n) into
/// P(A_1, ..., A_n): row sums of absolute values of the scaled fiber matrix.
inline std::vector<Rational> polydisc_bound_N_exact(std::span<const long long> ks,
                                                    std::span<const Rational> a_rest) {
  const RationalMatrix m = detail::scaled_n_star(ks, a_rest);
  std::vector<Rational> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out[i] += abs(m(i, j));
  return out;
}

inline std::vector<double> polydisc_bound_N(std::span<const long long> ks, std::span<const double> a_rest) {
  const auto exact = polydisc_bound_N_exact(ks, detail::to_rationals(a_rest));
  std::vector<double> out;
  out.reserve(exact.size());
  for (const auto& x : exact) out.push_back(x.convert_to<double>());
  return out;
}

/// The first `count` primes.
inline std::vector<long long> first_primes(std::size_t count) {
  std::vector<long long> primes;
  for (long long c = 2; primes.size() < count; ++c) {
    bool prime = true;
    for (long long p : primes) {
      if (p * p > c) break;
      if (c % p == 0) {
        prime = false;
        break;
      }
    }
    if (prime) primes.push_back(c);
  }
  return primes;
}

/// Pairwise coprime k_i < cap_i built from the first n - 1 primes p_i:
/// l = lcm of all |p_i - p_j|, k_i = m l - p_i with one multiplier m, the
/// largest with m l < min cap. A common divisor of k_i and k_j divides
/// p_i - p_j, hence l, hence p_i and p_j, so it is 1.
inline std::vector<long long> find_coprime_ks(std::span<const double> caps) {
  detail::require(!caps.empty(), ErrorKind::InvalidArgument, "need at least one cap");
  for (double c : caps) detail::require(c > 0.0, ErrorKind::NonPositiveEntry, "caps must be positive");
  const auto primes = first_primes(caps.size());
  long long l = 1;
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = i + 1; j < primes.size(); ++j) l = std::lcm(l, primes[j] - primes[i]);
  const double cap = *std::min_element(caps.begin(), caps.end());
  auto m = static_cast<long long>(std::floor(cap / static_cast<double>(l)));
  while (m > 0 && static_cast<double>(m * l) >= cap) --m;
  std::vector<long long> ks;
  ks.reserve(primes.size());
  for (long long p : primes) {
    const long long k = m * l - p;
    detail::require(k >= 1, ErrorKind::CapTooSmall,
                    "caps too small for the prime construction (lcm of differences " + std::to_string(l) + ")");
    ks.push_back(k);
  }
  return ks;
}

/// Samples box(b_1, ..., b_n) on the grid x_i = (j + 1/2) b_i / resolution,
/// maps every point by `matrix` and reduces modulo 1. True iff no two
/// samples land on the same torus point. Exact; no tolerance.
inline bool torus_injectivity_check(const RationalMatrix& matrix, std::span<const Rational> box, int resolution) {
  const std::size_t n = matrix.size();
  detail::require(box.size() == n, ErrorKind::DimensionMismatch, "box dimension does not match matrix");
  detail::require(resolution >= 1, ErrorKind::InvalidArgument, "resolution must be >= 1");
  for (const auto& b : box) detail::require(b > 0, ErrorKind::NonPositiveEntry, "box sides must be positive");

  std::set<std::vector<Rational>> seen;
  std::vector<int> index(n, 0);
  std::vector<Rational> x(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (Rational(index[i]) + Rational(1, 2)) * box[i] / resolution;
    std::vector<Rational> y = matrix.apply(x);
    for (auto& v : y) v = mod1(v);
    if (!seen.insert(std::move(y)).second) return false;
    std::size_t d = 0;
    while (d < n && ++index[d] == resolution) index[d++] = 0;
    if (d == n) return true;
  }
}

}  // namespace symb
