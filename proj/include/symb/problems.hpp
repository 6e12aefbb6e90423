#pragma once

// The four embedding problems E(1, a) or P(1, a) into a ball or cube, plus
// the higher-dimensional polydisc-into-cube problem, with the best known
// bounds for each.

#include <optional>
#include <string>
#include <string_view>

#include "symb/capacities.hpp"
#include "symb/domain.hpp"
#include "symb/folding.hpp"
#include "symb/lagrangian.hpp"

namespace symb {

enum class Problem { EB, EC, PB, PC, PC2n };

constexpr std::string_view to_string(Problem p) noexcept {
  switch (p) {
    case Problem::EB: return "EB";
    case Problem::EC: return "EC";
    case Problem::PB: return "PB";
    case Problem::PC: return "PC";
    case Problem::PC2n: return "PC2n";
  }
  return "Unknown";
}

inline Problem parse_problem(std::string_view name) {
  for (Problem p : {Problem::EB, Problem::EC, Problem::PB, Problem::PC, Problem::PC2n}) {
    if (to_string(p) == name) return p;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown problem '" + std::string(name) + "'");
}

/// A problem instance family: the problem and its half-dimension (2 except
/// for PC2n).
struct ProblemSpec {
  Problem problem;
  int half_dimension = 2;

  ProblemSpec(Problem p, int n = 2) : problem(p), half_dimension(p == Problem::PC2n ? n : 2) {
    detail::require(p != Problem::PC2n || n >= 2, ErrorKind::InvalidArgument, "PC2n needs n >= 2");
  }

  bool ellipsoid_source() const noexcept { return problem == Problem::EB || problem == Problem::EC; }
  bool ball_target() const noexcept { return problem == Problem::EB || problem == Problem::PB; }

  Shape source(double a) const {
    detail::require(a >= 1.0, ErrorKind::OutOfDomain, "problem parameter must be >= 1");
    if (ellipsoid_source()) return Ellipsoid::thin(a, half_dimension);
    return Polydisc::thin(a, half_dimension);
  }

  TargetFamily target() const {
    return ball_target() ? TargetFamily::ball(half_dimension) : TargetFamily::cube(half_dimension);
  }
};

inline Bound fold_upper_bound(const ProblemSpec& spec, double a, const Accuracy& acc = {}) {
  switch (spec.problem) {
    case Problem::EB: return ellipsoid_ball_fold_bound(a, acc);
    case Problem::EC: return ellipsoid_cube_fold_bound(a, acc);
    case Problem::PB: return polydisc_ball_fold_bound(a);
    case Problem::PC: return polydisc_cube_fold_bound(a);
    case Problem::PC2n: return polydisc_cube_fold_bound(a, spec.half_dimension);
  }
  throw Error(ErrorKind::InvalidArgument, "unknown problem");
}

/// The closed-form single-k Lagrangian bound, where one exists.
inline std::optional<Bound> lagrangian_upper_bound(const ProblemSpec& spec, double a) {
  if (spec.problem == Problem::EB) return ellipsoid_ball_lagrangian_bound(a);
  if (spec.problem == Problem::PC) return polydisc_cube_lagrangian_bound(a);
  return std::nullopt;
}

/// Smaller of the folding and Lagrangian bounds; ties go to folding.
inline Bound best_upper_bound(const ProblemSpec& spec, double a, const Accuracy& acc = {}) {
  Bound fold = fold_upper_bound(spec, a, acc);
  auto lagr = lagrangian_upper_bound(spec, a);
  if (lagr && lagr->value() < fold.value()) return *lagr;
  return fold;
}

inline Bound best_lower_bound(const ProblemSpec& spec, double a) {
  return best_lower_bound(spec.source(a), spec.target());
}

}  // namespace symb
