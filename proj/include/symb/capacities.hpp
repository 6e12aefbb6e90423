#pragma once

// Ekeland-Hofer capacities and the obstructions they give.
//
// For an ellipsoid the capacities c_1 <= c_2 <= ... enumerate the action
// spectrum {m * a_i : m >= 1}, counted with multiplicity. For a polydisc only
// the smallest factor is seen: c_k(P(a_1, ..., a_n)) = k * a_1.

#include <cmath>
#include <cstddef>
#include <numeric>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "symb/domain.hpp"

namespace symb {

struct SpectrumPrefix {
  std::vector<double> values;
  // values[i] == multiples[i] * bases[i]
  std::vector<long long> multiples;
  std::vector<double> bases;
  std::size_t count() const noexcept { return values.size(); }
};

/// The `count` smallest elements of {m * a_i : m >= 1, 1 <= i <= n}, merged
/// from n sorted sequences with a heap. Ties keep their multiplicity.
inline SpectrumPrefix spectrum_prefix(const Ellipsoid& e, std::size_t count) {
  detail::require(count >= 1, ErrorKind::InvalidArgument, "spectrum count must be >= 1");
  struct Head {
    double value;
    long long multiple;
    std::size_t axis;
  };
  auto later = [](const Head& x, const Head& y) {
    return x.value > y.value || (x.value == y.value && x.axis > y.axis);
  };
  std::priority_queue<Head, std::vector<Head>, decltype(later)> heads(later);
  const auto radii = e.radii();
  for (std::size_t i = 0; i < radii.size(); ++i) heads.push({radii[i], 1, i});

  SpectrumPrefix out;
  out.values.reserve(count);
  out.multiples.reserve(count);
  out.bases.reserve(count);
  while (out.values.size() < count) {
    Head h = heads.top();
    heads.pop();
    out.values.push_back(h.value);
    out.multiples.push_back(h.multiple);
    out.bases.push_back(radii[h.axis]);
    const long long next = h.multiple + 1;
    heads.push({static_cast<double>(next) * radii[h.axis], next, h.axis});
  }
  return out;
}

inline double eh_capacity(const Ellipsoid& e, long long k) {
  detail::require(k >= 1, ErrorKind::InvalidArgument, "capacity index must be >= 1");
  return spectrum_prefix(e, static_cast<std::size_t>(k)).values.back();
}

inline double eh_capacity(const Polydisc& p, long long k) {
  detail::require(k >= 1, ErrorKind::InvalidArgument, "capacity index must be >= 1");
  return static_cast<double>(k) * p.smallest();
}

inline double eh_capacity(const Shape& s, long long k) {
  return std::visit([k](const auto& x) { return eh_capacity(x, k); }, s);
}

/// c_k of the unit ball (ceil(k/n)) or the unit cube (k).
inline long long unit_target_capacity(const TargetFamily& target, long long k) {
  detail::require(k >= 1, ErrorKind::InvalidArgument, "capacity index must be >= 1");
  if (target.family == Family::Cube) return k;
  const long long n = target.half_dimension;
  return (k + n - 1) / n;
}

namespace detail {

inline void require_same_dimension(const Shape& source, const TargetFamily& target) {
  require(half_dimension(source) == static_cast<std::size_t>(target.half_dimension),
          ErrorKind::DimensionMismatch,
          "source has half-dimension " + std::to_string(half_dimension(source)) +
              " but target has " + std::to_string(target.half_dimension));
}

inline SpectrumPrefix capacity_prefix(const Shape& source, std::size_t k_max) {
  if (const auto* e = std::get_if<Ellipsoid>(&source)) return spectrum_prefix(*e, k_max);
  const auto& p = std::get<Polydisc>(source);
  SpectrumPrefix out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    out.values.push_back(static_cast<double>(k) * p.smallest());
    out.multiples.push_back(static_cast<long long>(k));
    out.bases.push_back(p.smallest());
  }
  return out;
}

// (m * base) / unit with the integer part cancelled first, so that m == unit
// gives back base exactly.
inline double capacity_ratio(long long m, double base, long long unit) {
  const long long g = std::gcd(m, unit);
  const long long num = m / g, den = unit / g;
  const double scaled = static_cast<double>(num) * base;
  return den == 1 ? scaled : scaled / static_cast<double>(den);
}

}  // namespace detail

/// sup_{k <= k_max} c_k(source) / c_k(unit target). No symplectic embedding
/// into a target of capacity strictly below the returned value exists.
/// The certificate is the smallest maximizing k.
inline Bound eh_lower_bound(const Shape& source, const TargetFamily& target, long long k_max = 100) {
  detail::require_same_dimension(source, target);
  detail::require(k_max >= 1, ErrorKind::InvalidArgument, "k_max must be >= 1");
  const auto caps = detail::capacity_prefix(source, static_cast<std::size_t>(k_max));
  double best = 0.0;
  long long best_k = 1;
  for (long long k = 1; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(k - 1);
    const double ratio = detail::capacity_ratio(caps.multiples[i], caps.bases[i], unit_target_capacity(target, k));
    if (ratio > best) {
      best = ratio;
      best_k = k;
    }
  }
  return Bound(best, Direction::Lower, Method::EkelandHofer, IndexCertificate{best_k});
}

/// Smallest target capacity whose volume is at least the source volume.
inline Bound volume_lower_bound(const Shape& source, const TargetFamily& target) {
  detail::require_same_dimension(source, target);
  const double n = static_cast<double>(target.half_dimension);
  double scaled = volume(source);
  if (target.family == Family::Ball) scaled *= detail::factorial(static_cast<std::size_t>(target.half_dimension));
  const double value = target.half_dimension == 2 ? std::sqrt(scaled) : std::pow(scaled, 1.0 / n);
  return Bound(value, Direction::Lower, Method::Volume);
}

/// Larger of the capacity and volume obstructions; ties go to the capacity.
inline Bound best_lower_bound(const Shape& source, const TargetFamily& target, long long k_max = 100) {
  Bound eh = eh_lower_bound(source, target, k_max);
  Bound vol = volume_lower_bound(source, target);
  return vol.value() > eh.value() ? vol : eh;
}

/// E(a) embeds into E(a') by a linear symplectic map iff a_i <= a'_i for all i.
inline bool linear_embeds(const Ellipsoid& e, const Ellipsoid& target) {
  detail::require(e.half_dimension() == target.half_dimension(), ErrorKind::DimensionMismatch,
                  "ellipsoids of different dimension");
  const auto a = e.radii();
  const auto b = target.radii();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

/// Rigidity under pinching: if a_n <= 2 a_1, E(a_1, ..., a_n) does not embed
/// in any ball of capacity below a_n. Returns false whenever the pinching
/// hypothesis fails; the criterion is silent there.
inline bool pinching_excludes(const Ellipsoid& e, double ball_capacity) {
  return e.largest() <= 2.0 * e.smallest() && ball_capacity < e.largest();
}

/// The embedding invariants e_i of an ellipsoid are its radii.
inline std::vector<double> ellipsoid_e_invariants(const Ellipsoid& e) {
  return {e.radii().begin(), e.radii().end()};
}

/// The dual invariants e^i are known to equal the radii only when 2 a_1 >= a_n.
inline std::optional<std::vector<double>> ellipsoid_dual_e_invariants(const Ellipsoid& e) {
  if (2.0 * e.smallest() < e.largest()) return std::nullopt;
  return ellipsoid_e_invariants(e);
}

}  // namespace symb
