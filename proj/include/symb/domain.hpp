#pragma once

// Shapes, targets and the bound record shared by every module.
//
// All capacities, radii and areas are stored in units of pi: the ellipsoid
// E(pi, 4 pi) is Ellipsoid{{1, 4}} and a bound of 2.6916 means a ball of
// capacity 2.6916 pi. Volumes are reported as the coefficient of pi^n.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "symb/error.hpp"

namespace symb {

/// Sorted copy of `raw`; throws NonPositiveEntry on any entry that is not > 0.
inline std::vector<double> normalize(std::span<const double> raw) {
  detail::require(!raw.empty(), ErrorKind::InvalidArgument, "shape needs at least one entry");
  std::vector<double> sorted(raw.begin(), raw.end());
  for (double x : sorted) {
    // also rejects NaN
    detail::require(x > 0.0, ErrorKind::NonPositiveEntry, "entries must be strictly positive");
  }
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

inline std::vector<double> normalize(std::initializer_list<double> raw) {
  return normalize(std::span<const double>(raw.begin(), raw.size()));
}

/// E(a_1, ..., a_n) with a_1 <= ... <= a_n.
class Ellipsoid {
 public:
  explicit Ellipsoid(std::span<const double> radii) : radii_(normalize(radii)) {}
  Ellipsoid(std::initializer_list<double> radii) : radii_(normalize(radii)) {}

  /// E(1, ..., 1, a) in 2n dimensions.
  static Ellipsoid thin(double a, int half_dimension = 2) {
    detail::require(half_dimension >= 1, ErrorKind::InvalidArgument, "half-dimension must be >= 1");
    std::vector<double> r(static_cast<std::size_t>(half_dimension), 1.0);
    r.back() = a;
    return Ellipsoid(r);
  }

  std::span<const double> radii() const noexcept { return radii_; }
  std::size_t half_dimension() const noexcept { return radii_.size(); }
  double smallest() const noexcept { return radii_.front(); }
  double largest() const noexcept { return radii_.back(); }

  friend bool operator==(const Ellipsoid&, const Ellipsoid&) = default;

 private:
  std::vector<double> radii_;
};

/// P(a_1, ..., a_n) with a_1 <= ... <= a_n.
class Polydisc {
 public:
  explicit Polydisc(std::span<const double> areas) : areas_(normalize(areas)) {}
  Polydisc(std::initializer_list<double> areas) : areas_(normalize(areas)) {}

  /// P(1, ..., 1, a) in 2n dimensions.
  static Polydisc thin(double a, int half_dimension = 2) {
    detail::require(half_dimension >= 1, ErrorKind::InvalidArgument, "half-dimension must be >= 1");
    std::vector<double> r(static_cast<std::size_t>(half_dimension), 1.0);
    r.back() = a;
    return Polydisc(r);
  }

  std::span<const double> areas() const noexcept { return areas_; }
  std::size_t half_dimension() const noexcept { return areas_.size(); }
  double smallest() const noexcept { return areas_.front(); }
  double largest() const noexcept { return areas_.back(); }

  friend bool operator==(const Polydisc&, const Polydisc&) = default;

 private:
  std::vector<double> areas_;
};

using Shape = std::variant<Ellipsoid, Polydisc>;

inline std::size_t half_dimension(const Shape& s) {
  return std::visit([](const auto& x) { return x.half_dimension(); }, s);
}

enum class Family { Ball, Cube };

struct TargetFamily {
  Family family;
  int half_dimension;

  TargetFamily(Family f, int n) : family(f), half_dimension(n) {
    detail::require(n >= 1, ErrorKind::InvalidArgument, "target half-dimension must be >= 1");
  }

  static TargetFamily ball(int n) { return {Family::Ball, n}; }
  static TargetFamily cube(int n) { return {Family::Cube, n}; }

  friend bool operator==(const TargetFamily&, const TargetFamily&) = default;
};

namespace detail {

inline double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

inline double product(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 1.0, std::multiplies<>());
}

}  // namespace detail

inline double volume(const Ellipsoid& e) {
  return detail::product(e.radii()) / detail::factorial(e.half_dimension());
}

inline double volume(const Polydisc& p) { return detail::product(p.areas()); }

inline double volume(const Shape& s) {
  return std::visit([](const auto& x) { return volume(x); }, s);
}

/// Volume of B^{2n}(value) or C^{2n}(value).
inline double volume(const TargetFamily& target, double value) {
  detail::require(value > 0.0, ErrorKind::NonPositiveEntry, "target capacity must be positive");
  const auto n = static_cast<std::size_t>(target.half_dimension);
  const double power = std::pow(value, static_cast<double>(n));
  return target.family == Family::Ball ? power / detail::factorial(n) : power;
}

/// Bisection tolerance plus a guard on every loop that is proved to terminate.
struct Accuracy {
  double acc = 1e-9;
  long max_iter = 1'000'000;

  Accuracy() = default;
  explicit Accuracy(double acc_, long max_iter_ = 1'000'000) : acc(acc_), max_iter(max_iter_) {
    detail::require(acc > 0.0, ErrorKind::InvalidArgument, "accuracy must be positive");
    detail::require(max_iter >= 1, ErrorKind::InvalidArgument, "max_iter must be >= 1");
  }
};

enum class Direction { Lower, Upper };

enum class Method {
  Volume,
  EkelandHofer,
  Inclusion,
  MultiFold,
  ClosedFormFold,
  LagrangianM,
  LagrangianN,
  Diagonal,
};

constexpr std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::Volume: return "Volume";
    case Method::EkelandHofer: return "EkelandHofer";
    case Method::Inclusion: return "Inclusion";
    case Method::MultiFold: return "MultiFold";
    case Method::ClosedFormFold: return "ClosedFormFold";
    case Method::LagrangianM: return "LagrangianM";
    case Method::LagrangianN: return "LagrangianN";
    case Method::Diagonal: return "Diagonal";
  }
  return "Unknown";
}

constexpr std::string_view to_string(Direction d) noexcept {
  return d == Direction::Lower ? "Lower" : "Upper";
}

struct NoCertificate {
  friend bool operator==(const NoCertificate&, const NoCertificate&) = default;
};

/// Fold point u_1 of a successful folding and the number of folds it used.
struct FoldCertificate {
  double u1;
  int folds;
  friend bool operator==(const FoldCertificate&, const FoldCertificate&) = default;
};

/// A single integer parameter: capacity index k, or the branch index of a
/// piecewise closed form.
struct IndexCertificate {
  long long k;
  friend bool operator==(const IndexCertificate&, const IndexCertificate&) = default;
};

struct KVectorCertificate {
  std::vector<long long> ks;
  friend bool operator==(const KVectorCertificate&, const KVectorCertificate&) = default;
};

using Certificate = std::variant<NoCertificate, FoldCertificate, IndexCertificate, KVectorCertificate>;

/// A one-sided estimate of a squeezing constant. Upper bounds are infima:
/// every capacity strictly above `value()` is achieved, `value()` itself
/// need not be.
class Bound {
 public:
  Bound(double value, Direction direction, Method method, Certificate certificate = NoCertificate{})
      : value_(value), direction_(direction), method_(method), certificate_(std::move(certificate)) {
    detail::require(value_ > 0.0, ErrorKind::InvalidArgument, "bound value must be positive");
    detail::require(certificate_matches(method_, certificate_), ErrorKind::InvalidArgument,
                    "certificate does not match method " + std::string(to_string(method_)));
  }

  double value() const noexcept { return value_; }
  Direction direction() const noexcept { return direction_; }
  Method method() const noexcept { return method_; }
  const Certificate& certificate() const noexcept { return certificate_; }

  /// Compact, comma-free description, e.g. "MultiFold[u1=1.234567890 N=7]".
  std::string describe() const {
    std::string out(to_string(method_));
    std::visit(
        [&out](const auto& c) {
          using C = std::decay_t<decltype(c)>;
          char buf[64];
          if constexpr (std::is_same_v<C, FoldCertificate>) {
            std::snprintf(buf, sizeof buf, "[u1=%.9f N=%d]", c.u1, c.folds);
            out += buf;
          } else if constexpr (std::is_same_v<C, IndexCertificate>) {
            out += "[k=" + std::to_string(c.k) + "]";
          } else if constexpr (std::is_same_v<C, KVectorCertificate>) {
            out += "[k=";
            for (std::size_t i = 0; i < c.ks.size(); ++i) {
              if (i) out += 'x';
              out += std::to_string(c.ks[i]);
            }
            out += "]";
          }
        },
        certificate_);
    return out;
  }

  static bool certificate_matches(Method m, const Certificate& c) {
    switch (m) {
      case Method::Volume:
      case Method::Inclusion:
      case Method::Diagonal:
        return std::holds_alternative<NoCertificate>(c);
      case Method::EkelandHofer:
      case Method::ClosedFormFold:
        return std::holds_alternative<IndexCertificate>(c);
      case Method::MultiFold:
        return std::holds_alternative<FoldCertificate>(c);
      case Method::LagrangianM:
      case Method::LagrangianN:
        return std::holds_alternative<KVectorCertificate>(c);
    }
    return false;
  }

 private:
  double value_;
  Direction direction_;
  Method method_;
  Certificate certificate_;
};

}  // namespace symb
