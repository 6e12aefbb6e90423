#pragma once

// Grid sweeps over the problem parameter with deterministic CSV/JSON output,
// named one-parameter bound functions, and crossover location by bisection.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "symb/capacities.hpp"
#include "symb/problems.hpp"

namespace symb {

struct SweepRow {
  double a;
  std::optional<double> vol_lb, eh_lb, lb_best, fold_ub, lagr_ub, ub_best;
  std::string cert;
};

struct SweepConfig {
  ProblemSpec spec;
  Accuracy acc;
};

inline SweepRow evaluate_row(const SweepConfig& config, double a) {
  const Shape source = config.spec.source(a);
  const TargetFamily target = config.spec.target();
  const Bound vol = volume_lower_bound(source, target);
  const Bound eh = eh_lower_bound(source, target);
  const Bound& lb = vol.value() > eh.value() ? vol : eh;
  const Bound fold = fold_upper_bound(config.spec, a, config.acc);
  const auto lagr = lagrangian_upper_bound(config.spec, a);
  const Bound& ub = lagr && lagr->value() < fold.value() ? *lagr : fold;

  SweepRow row{a, vol.value(), eh.value(), lb.value(), fold.value(), std::nullopt, ub.value(), {}};
  if (lagr) row.lagr_ub = lagr->value();
  row.cert = "lb=" + lb.describe() + ";ub=" + ub.describe();
  return row;
}

/// from, from + step, ... up to `to` (inclusive up to 1e-9 step of slack).
inline std::vector<double> make_grid(double from, double to, double step) {
  detail::require(std::isfinite(from) && std::isfinite(to), ErrorKind::InvalidArgument, "grid ends must be finite");
  detail::require(step > 0.0, ErrorKind::InvalidArgument, "step must be positive");
  detail::require(from <= to, ErrorKind::InvalidArgument, "need a-from <= a-to");
  const double count = std::floor((to - from) / step + 1e-9) + 1;
  detail::require(count <= 1e8, ErrorKind::InvalidArgument, "grid has too many points");
  std::vector<double> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    grid.push_back(from + static_cast<double>(i) * step);
  }
  return grid;
}

/// Evaluates every grid point, on `threads` workers if > 1. The result is
/// independent of the thread count; if several points fail, the error of
/// the first one in grid order is rethrown.
inline std::vector<SweepRow> sweep(const SweepConfig& config, const std::vector<double>& grid, unsigned threads = 1) {
  std::vector<SweepRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < grid.size(); i += stride) {
      try {
        rows[i] = evaluate_row(config, grid[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(grid.size(), 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

namespace detail {

inline std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

inline std::string fixed9(const std::optional<double>& x) { return x ? fixed9(*x) : std::string(); }

inline std::string json_number(const std::optional<double>& x) { return x ? fixed9(*x) : std::string("null"); }

inline std::string json_string(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline constexpr std::string_view kCsvHeader = "a,vol_lb,eh_lb,lb_best,fold_ub,lagr_ub,ub_best,cert";

inline std::string to_csv(const std::vector<SweepRow>& rows) {
  using detail::fixed9;
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += fixed9(r.a) + ',' + fixed9(r.vol_lb) + ',' + fixed9(r.eh_lb) + ',' + fixed9(r.lb_best) + ',' +
           fixed9(r.fold_ub) + ',' + fixed9(r.lagr_ub) + ',' + fixed9(r.ub_best) + ',' + r.cert + '\n';
  }
  return out;
}

inline std::string to_json(const std::vector<SweepRow>& rows) {
  using detail::json_number;
  std::string out = "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    out += "  {\"a\":" + detail::fixed9(r.a) + ",\"vol_lb\":" + json_number(r.vol_lb) +
           ",\"eh_lb\":" + json_number(r.eh_lb) + ",\"lb_best\":" + json_number(r.lb_best) +
           ",\"fold_ub\":" + json_number(r.fold_ub) + ",\"lagr_ub\":" + json_number(r.lagr_ub) +
           ",\"ub_best\":" + json_number(r.ub_best) + ",\"cert\":" + detail::json_string(r.cert) + "}";
    out += i + 1 < rows.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

using BoundFunction = std::function<double(double)>;

/// Bound functions by name: s_EB, s_EC, s_PB, s_PC (folding), l_EB, l_PC
/// (Lagrangian), volume_XX and eh_XX (lower bounds) for XX in EB, EC, PB, PC.
inline BoundFunction named_bound(std::string_view name, const Accuracy& acc = {}) {
  if (name == "s_EB") return [acc](double a) { return ellipsoid_ball_fold_bound(a, acc).value(); };
  if (name == "s_EC") return [acc](double a) { return ellipsoid_cube_fold_bound(a, acc).value(); };
  if (name == "s_PB") return [](double a) { return polydisc_ball_fold_bound(a).value(); };
  if (name == "s_PC") return [](double a) { return polydisc_cube_fold_bound(a).value(); };
  if (name == "l_EB") return [](double a) { return ellipsoid_ball_lagrangian_bound(a).value(); };
  if (name == "l_PC") return [](double a) { return polydisc_cube_lagrangian_bound(a).value(); };
  for (std::string_view prefix : {"volume_", "eh_"}) {
    if (name.substr(0, prefix.size()) != prefix) continue;
    const ProblemSpec spec(parse_problem(name.substr(prefix.size())));
    detail::require(spec.problem != Problem::PC2n, ErrorKind::InvalidArgument, "no named bound for PC2n");
    if (prefix == "volume_") {
      return [spec](double a) { return volume_lower_bound(spec.source(a), spec.target()).value(); };
    }
    return [spec](double a) { return eh_lower_bound(spec.source(a), spec.target()).value(); };
  }
  throw Error(ErrorKind::InvalidArgument, "unknown bound '" + std::string(name) + "'");
}

/// Root of right - left on [lo, hi] by bisection until the bracket is at
/// most tol wide; returns the bracket midpoint. The difference must change
/// sign strictly between the endpoints, otherwise NoSignChange.
inline double crossover(const BoundFunction& left, const BoundFunction& right, double lo, double hi, double tol,
                        long max_iter = 1'000'000) {
  detail::require(lo < hi, ErrorKind::InvalidArgument, "need lo < hi");
  detail::require(tol > 0.0, ErrorKind::InvalidArgument, "tolerance must be positive");
  auto diff = [&](double a) { return right(a) - left(a); };
  const double d_lo = diff(lo);
  const double d_hi = diff(hi);
  if (!(d_lo < 0 && d_hi > 0) && !(d_lo > 0 && d_hi < 0)) {
    throw Error(ErrorKind::NoSignChange, "difference does not change sign on the interval");
  }
  const bool rising = d_lo < 0;
  long iterations = 0;
  while (hi - lo > tol) {
    if (++iterations > max_iter) throw Error(ErrorKind::NonTermination, "crossover bisection did not converge");
    const double mid = (lo + hi) / 2;
    if ((diff(mid) < 0) == rising) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return (lo + hi) / 2;
}

}  // namespace symb
