#pragma once

// Widths and packing numbers obtained by duality from squeezing constants,
// deficiencies of the upper bounds against the volume condition, and the
// closed-form packing numbers of ruled surfaces and of T^2 x Sigma.

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symb/domain.hpp"
#include "symb/folding.hpp"
#include "symb/lagrangian.hpp"
#include "symb/problems.hpp"

namespace symb {

/// Rescaling E(1, q_2, ..., q_n) into s times a target is the same as
/// putting a copy of width 1/s into the target.
inline double width_from_squeezing(double s) {
  detail::require(s > 0.0, ErrorKind::InvalidArgument, "squeezing constant must be positive");
  return 1.0 / s;
}

enum class WeightShape { Ellipsoid, Polydisc };

/// Fraction of `target_volume` filled by the weighted shape of width w:
/// w^n q_2 ... q_n / (n! Vol) for ellipsoids, without n! for polydiscs,
/// n = weights.size() + 1. Values within 1e-9 above 1 are rounded to 1.
inline double packing_number(double width, std::span<const double> weights, double target_volume,
                             WeightShape shape) {
  detail::require(width > 0.0, ErrorKind::NonPositiveEntry, "width must be positive");
  detail::require(target_volume > 0.0, ErrorKind::NonPositiveEntry, "target volume must be positive");
  for (double q : weights) detail::require(q > 0.0, ErrorKind::NonPositiveEntry, "weights must be positive");
  const std::size_t n = weights.size() + 1;
  double value = std::pow(width, static_cast<double>(n)) * detail::product(weights) / target_volume;
  if (shape == WeightShape::Ellipsoid) value /= detail::factorial(n);
  detail::require(value <= 1.0 + 1e-9, ErrorKind::RatioExceedsOne,
                  "packing number " + std::to_string(value) + " exceeds 1");
  return std::min(value, 1.0);
}

/// Bound used for the deficiency of each four-dimensional problem: the
/// Lagrangian bound for EB, folding for the others.
inline double deficiency(Problem kind, double a, const Accuracy& acc = {}) {
  switch (kind) {
    case Problem::EB: return ellipsoid_ball_lagrangian_bound(a).value() - std::sqrt(a);
    case Problem::PB: return polydisc_ball_fold_bound(a).value() - std::sqrt(2 * a);
    case Problem::EC: return ellipsoid_cube_fold_bound(a, acc).value() - std::sqrt(a / 2);
    case Problem::PC: return polydisc_cube_fold_bound(a).value() - std::sqrt(a);
    case Problem::PC2n: break;
  }
  throw Error(ErrorKind::UnsupportedKind, "no deficiency for " + std::string(to_string(kind)));
}

struct DeficiencyPoint {
  double a;
  double d;
};

struct DeficiencyMaxima {
  std::vector<DeficiencyPoint> points;
  /// +1 if the maxima increase, -1 if they decrease.
  int direction;
  double limit;
  /// True when the sequence is strictly monotone in `direction` and stays on
  /// the near side of `limit`.
  bool consistent;
};

/// Local maxima of the deficiency for k = 1 .. k_max, from their closed
/// forms. EC has none in closed form and raises UnsupportedKind.
inline DeficiencyMaxima deficiency_maxima(Problem kind, int k_max) {
  detail::require(k_max >= 1, ErrorKind::InvalidArgument, "k_max must be >= 1");
  DeficiencyMaxima out{{}, 0, 0.0, true};
  for (int i = 1; i <= k_max; ++i) {
    const double k = i;
    switch (kind) {
      case Problem::EB: out.points.push_back({k * (k + 2), (k + 2) - std::sqrt(k * (k + 2))}); break;
      case Problem::PB: {
        const double m = k * k - k + 1;
        out.points.push_back({2 * m, 2 * k + 1 - 2 * std::sqrt(m)});
        break;
      }
      case Problem::PC: {
        const double m = k * k - k + 2;
        out.points.push_back({m, k + 1 - std::sqrt(m)});
        break;
      }
      default:
        throw Error(ErrorKind::UnsupportedKind,
                    "deficiency maxima are not known in closed form for " + std::string(to_string(kind)));
    }
  }
  switch (kind) {
    case Problem::EB: out.direction = -1; out.limit = 1.0; break;
    case Problem::PB: out.direction = 1; out.limit = 2.0; break;
    default: out.direction = 1; out.limit = 1.5; break;
  }
  for (std::size_t i = 0; i < out.points.size(); ++i) {
    const double d = out.points[i].d;
    if (out.direction * (out.limit - d) <= 0) out.consistent = false;
    if (i > 0 && out.direction * (d - out.points[i - 1].d) <= 0) out.consistent = false;
  }
  return out;
}

/// Packing number of a ruled surface by one ball. Genus 0: S^2(a) x S^2(b)
/// (order irrelevant) or the twisted bundle, which needs a > b/2. Higher
/// genus: min(1, b/(2a)).
inline double ruled_surface_packing(int genus, double a, double b, bool twisted) {
  detail::require(genus >= 0, ErrorKind::InvalidArgument, "genus must be >= 0");
  detail::require(a > 0.0 && b > 0.0, ErrorKind::NonPositiveEntry, "areas must be positive");
  if (genus >= 1) return std::min(1.0, b / (2 * a));
  if (!twisted) {
    if (a < b) std::swap(a, b);
    return b / (2 * a);
  }
  detail::require(a > b / 2, ErrorKind::InvalidCohomologyClass, "twisted bundle needs a > b/2");
  return b / (2 * a);
}

/// Lower bound for the packing number of T^2(1) x Sigma(a).
inline double jiang_lower_bound(double a) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "a must be >= 1");
  return std::max(a + 1 - std::sqrt(2 * a + 1), 2.0) / (4 * a);
}

/// Share of the target's volume taken by the source under the best known
/// embedding.
inline double asymptotic_ratio(const ProblemSpec& spec, double a, const Accuracy& acc = {}) {
  const Bound ub = best_upper_bound(spec, a, acc);
  return volume(spec.source(a)) / volume(spec.target(), ub.value());
}

}  // namespace symb
