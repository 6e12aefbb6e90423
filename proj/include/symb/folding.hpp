#pragma once

// Upper bounds from symplectic folding of four-dimensional ellipsoids and
// polydiscs, plus the closed forms that describe them on parts of their
// domain.
//
// Conventions: the source is E(1, a) or P(1, a) (units of pi). A folding is
// determined by the length u_1 of the first floor; all later floors are chosen
// maximal, so the whole embedding attempt is a deterministic recurrence in
// (u_j, r_j, l_j). The two loops below follow the reference Mathematica
// programs statement by statement, including the unchecked corner in the odd
// step of the ball loop (a violation there always surfaces as a failure in
// the next even step).

#include <algorithm>
#include <cmath>
#include <string>

#include "symb/domain.hpp"

namespace symb {

/// Loop state of a multiple folding: floor index j, length u_j of floor j,
/// remaining length r_j, fiber level l_j = r_j / a and the previous level.
struct FoldState {
  int j;
  double u;
  double r;
  double l;
  double l_prev;
};

/// State after the first two floors have been laid out for fold point u1.
inline FoldState initial_fold_state(double a, double u1) {
  const double u2 = (a + 1) / (a - 1) * u1 - a / (a - 1);
  const double r2 = a - u1 - u2;
  return {2, u2, r2, r2 / a, 1.0 - u1 / a};
}

struct FoldOutcome {
  bool feasible;
  /// 2 + (1 - 2/a) u1 when feasible; a when the attempt fails.
  double capacity;
  /// Number of folds executed (floors minus one).
  int folds;
};

namespace detail {

inline void check_guard(long& iterations, const Accuracy& guard, const char* where) {
  if (++iterations > guard.max_iter) {
    throw Error(ErrorKind::NonTermination,
                std::string(where) + " exceeded " + std::to_string(guard.max_iter) + " iterations");
  }
}

}  // namespace detail

/// Decides whether E(1, a) folds into B^4(2 + (1 - 2/a) u1) with first fold
/// at u1, all later floors maximal.
inline FoldOutcome fold_feasible(double a, double u1, const Accuracy& guard = {}) {
  detail::require(a > 2.0, ErrorKind::OutOfDomain, "ball folding needs a > 2, got " + std::to_string(a));
  detail::require(u1 >= a / (a + 1) && u1 <= a / 2, ErrorKind::OutOfInterval,
                  "fold point " + std::to_string(u1) + " outside [a/(a+1), a/2]");
  const double capacity = 2 + (1 - 2 / a) * u1;
  FoldState s = initial_fold_state(a, u1);
  long iterations = 0;
  while (true) {
    detail::check_guard(iterations, guard, "fold_feasible");
    if (s.j % 2 == 0) {
      if (s.r <= s.u) return {true, capacity, s.j - 1};
      if (s.u <= 2 * s.l) return {false, a, s.j - 1};
      ++s.j;
      s.u = a / (a - 2) * (s.u - 2 * s.l);
      s.r = s.r - s.u;
      s.l_prev = s.l;
      s.l = s.r / a;
    } else {
      if (s.r <= s.u + s.l_prev) return {true, capacity, s.j - 1};
      ++s.j;
      s.u = (a + 1) / (a - 1) * s.u;
      s.r = s.r - s.u;
      s.l = s.r / a;
    }
  }
}

/// Final bracket [lower, upper] of a fold-point bisection. `upper` always
/// yields an admissible folding; `midpoint()` is what the reference program
/// returns.
struct FoldPointBracket {
  double lower;
  double upper;
  double midpoint() const noexcept { return (lower + upper) / 2; }
};

/// Bisection for the smallest admissible fold point of E(1, a) into a ball,
/// run until the half-width drops to acc/2.
inline FoldPointBracket ball_fold_point(double a, const Accuracy& acc = {}) {
  double b = a / (a + 1);
  double c = a / 2;
  double u1 = (b + c) / 2;
  long iterations = 0;
  while ((c - b) / 2 > acc.acc / 2) {
    detail::check_guard(iterations, acc, "ball_fold_point");
    if (fold_feasible(a, u1, acc).feasible) {
      c = u1;
    } else {
      b = u1;
    }
    u1 = (b + c) / 2;
  }
  return {b, c};
}

/// Best multiple-folding bound for E(1, a) into a four-ball (s_EB on the
/// command line). For a <= 2 folding cannot help and the inclusion into
/// B^4(a) is returned.
inline Bound ellipsoid_ball_fold_bound(double a, const Accuracy& acc = {}) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "ellipsoid parameter must be >= 1");
  if (a <= 2.0) return Bound(a, Direction::Upper, Method::Inclusion);
  const FoldPointBracket bracket = ball_fold_point(a, acc);
  const FoldOutcome outcome = fold_feasible(a, bracket.upper, acc);
  return Bound(outcome.capacity, Direction::Upper, Method::MultiFold,
               FoldCertificate{bracket.upper, outcome.folds});
}

/// Optimal capacity A_N(a) reachable by folding exactly N in {1, 2, 3} times.
/// Generic in the scalar so it can be evaluated over exact rationals; the
/// expressions extend continuously to a = 2.
template <class T>
T ball_fold_closed_form(const T& a, int folds) {
  const T one(1), two(2), three(3), four(4);
  switch (folds) {
    case 1: return two + (a - two) / two;
    case 2: return two + (a - two) * (a + one) / (three * a + one);
    case 3: return two + (a - two) * (a + one) * (a + two) / (four * (a * a + a + one));
    default: throw Error(ErrorKind::InvalidArgument, "closed forms exist for 1, 2 or 3 folds only");
  }
}

inline double closed_form_A_N(double a, int folds) {
  detail::require(a > 2.0, ErrorKind::OutOfDomain, "closed forms need a > 2");
  return ball_fold_closed_form(a, folds);
}

/// Height of the folded image of E(1, a) inside the cube problem, together
/// with the number of folds it took.
struct FoldImage {
  double height;
  int folds;
};

inline FoldImage fold_image(double a, double u1, const Accuracy& guard = {}) {
  detail::require(a > 1.0, ErrorKind::OutOfDomain, "cube folding needs a > 1");
  detail::require(u1 > a / (a + 1) && u1 <= a / 2, ErrorKind::OutOfInterval,
                  "fold point " + std::to_string(u1) + " outside (a/(a+1), a/2]");
  const double l1 = 1 - u1 / a;
  FoldState s = initial_fold_state(a, u1);
  double h = 2 * l1;
  long iterations = 0;
  while (s.r > u1 + l1 - s.l) {
    detail::check_guard(iterations, guard, "fold_height");
    ++s.j;
    s.u = (a + 1) / (a - 1) * s.u;
    s.r = s.r - s.u;
    s.l_prev = s.l;
    s.l = s.r / a;
    if (s.j % 2 == 0) h = h + 2 * s.l_prev;
  }
  if (s.j % 2 == 0) {
    h = h + s.l;
  } else {
    h = h + std::max(s.l_prev, 2 * s.l);
  }
  return {h, s.j - 1};
}

inline double fold_height(double a, double u1, const Accuracy& guard = {}) {
  return fold_image(a, u1, guard).height;
}

/// Width u1 + l1 of the folded image.
inline double fold_width(double a, double u1) { return 1 + (1 - 1 / a) * u1; }

/// Bisection for the fold point where height and width of the image agree.
inline FoldPointBracket cube_fold_point(double a, const Accuracy& acc = {}) {
  double b = a / (a + 1);
  double c = a / 2;
  double u1 = (b + c) / 2;
  long iterations = 0;
  while ((c - b) / 2 > acc.acc / 2) {
    detail::check_guard(iterations, acc, "cube_fold_point");
    if (fold_height(a, u1, acc) > fold_width(a, u1)) {
      b = u1;
    } else {
      c = u1;
    }
    u1 = (b + c) / 2;
  }
  return {b, c};
}

/// Best multiple-folding bound for E(1, a) into a four-cube (s_EC). The
/// single fold at u1 = a/2 is evaluated as well and the smaller bound wins.
inline Bound ellipsoid_cube_fold_bound(double a, const Accuracy& acc = {}) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "ellipsoid parameter must be >= 1");
  if (a <= 1.0) return Bound(1.0, Direction::Upper, Method::Inclusion);
  const FoldPointBracket bracket = cube_fold_point(a, acc);
  const double multi = fold_width(a, bracket.upper);
  const double single = (a + 1) / 2;
  if (single < multi) {
    return Bound(single, Direction::Upper, Method::MultiFold, FoldCertificate{a / 2, 1});
  }
  const FoldImage image = fold_image(a, bracket.upper, acc);
  return Bound(multi, Direction::Upper, Method::MultiFold, FoldCertificate{bracket.upper, image.folds});
}

/// a(3a - 1) / (a^2 + 2a - 1): the cube folding bound for 1 <= a <= 4.2360...
template <class T>
T cube_fold_closed_form(const T& a) {
  const T one(1), two(2), three(3);
  return a * (three * a - one) / (a * a + two * a - one);
}

/// Optimal fold point a(2a - 1) / (a^2 + 2a - 1) on the same range.
template <class T>
T cube_fold_point_closed_form(const T& a) {
  const T one(1), two(2);
  return a * (two * a - one) / (a * a + two * a - one);
}

/// Folding bound for P(1, a) into a four-ball (s_PB): with k chosen so that
/// 2(k^2 - k + 1) < a <= 2(k^2 + k + 1), fold 2k - 1 times and reach
/// (a - 2)/(2k) + k + 2. For a <= 2 the inclusion into B^4(1 + a) is used.
inline Bound polydisc_ball_fold_bound(double a) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "polydisc parameter must be >= 1");
  if (a <= 2.0) return Bound(a + 1, Direction::Upper, Method::Inclusion);
  long long k = 1;
  while (a > 2.0 * static_cast<double>(k * k + k + 1)) ++k;
  const double kd = static_cast<double>(k);
  return Bound((a - 2) / (2 * kd) + kd + 2, Direction::Upper, Method::ClosedFormFold, IndexCertificate{k});
}

/// Folding bound for P(1, a) into a four-cube (s_PC), certificate N (the
/// number of folds). Inclusion for a <= 2.
inline Bound polydisc_cube_fold_bound(double a) {
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "polydisc parameter must be >= 1");
  if (a <= 2.0) return Bound(a, Direction::Upper, Method::Inclusion);
  long long n = 1;
  while (a > static_cast<double>(n * (n + 1) + 2)) ++n;
  const double nd = static_cast<double>(n);
  const double value = a <= static_cast<double>(n * n + 1) ? nd + 1 : (a + 2 * nd) / (nd + 1);
  return Bound(value, Direction::Upper, Method::ClosedFormFold, IndexCertificate{n});
}

/// Folding bound for P^{2n}(1, ..., 1, a) into a 2n-cube: N folds in every
/// layer, (N + 1)^{n-1} layers. Agrees with polydisc_cube_fold_bound for
/// n = 2. Inclusion for a <= 2.
inline Bound polydisc_cube_fold_bound(double a, int half_dimension) {
  detail::require(half_dimension >= 2, ErrorKind::InvalidArgument, "half-dimension must be >= 2");
  detail::require(a >= 1.0, ErrorKind::OutOfDomain, "polydisc parameter must be >= 1");
  if (a <= 2.0) return Bound(a, Direction::Upper, Method::Inclusion);
  // compare a itself rather than a - 2 so that n = 2 rounds like the 4D form
  const double e = static_cast<double>(half_dimension - 1);
  long long n = 1;
  while (a > static_cast<double>(n) * std::pow(static_cast<double>(n + 1), e) + 2) ++n;
  const double nd = static_cast<double>(n);
  const double layers = std::pow(nd + 1, e);
  const double value = a <= (nd - 1) * layers + 2 ? nd + 1 : (a + 2 * (layers - 1)) / layers;
  return Bound(value, Direction::Upper, Method::ClosedFormFold, IndexCertificate{n});
}

struct DiagonalBound {
  double bound;
  bool reduces;
};

/// Rotating P^{2n}(1, ..., 1, r^2) by 45 degrees in the (z_1, z_2) plane puts
/// it inside C^{2n}(1/2 + r^2/2 + r); this beats the trivial r^2 exactly when
/// r > 1 + sqrt(2).
inline DiagonalBound diagonal_cube_bound(double r, int half_dimension) {
  detail::require(r > 0.0, ErrorKind::InvalidArgument, "r must be positive");
  detail::require(half_dimension >= 2, ErrorKind::InvalidArgument, "half-dimension must be >= 2");
  return {0.5 + r * r / 2 + r, r > 1 + std::sqrt(2.0)};
}

}  // namespace symb
