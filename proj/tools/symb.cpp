// symb: command-line front end for the embedding bounds.
//
// Exit codes: 0 success, 2 invalid usage or input, 3 numeric failure.

#include <charconv>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "symb/symb.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

std::string shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string fixed9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9f", x);
  return buf;
}

template <class T>
std::string join(const std::vector<T>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += shortest(xs[i]);
    } else {
      out += std::to_string(xs[i]);
    }
  }
  return out;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    double value = 0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || res.ec != std::errc() || res.ptr != item.data() + item.size()) {
      throw symb::Error(symb::ErrorKind::InvalidArgument, "cannot parse number '" + std::string(item) + "'");
    }
    out.push_back(value);
    if (comma == std::string_view::npos) return out;
    text.remove_prefix(comma + 1);
  }
}

/// "E:1,2" or "P:1,2".
symb::Shape parse_source(const std::string& text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'E' && text[0] != 'P')) {
    throw symb::Error(symb::ErrorKind::InvalidArgument, "source must look like E:r1,r2,... or P:a1,a2,...");
  }
  const auto values = parse_list(std::string_view(text).substr(2));
  if (text[0] == 'E') return symb::Ellipsoid(values);
  return symb::Polydisc(values);
}

/// "B:A" or "C:A".
std::pair<symb::Family, double> parse_target(const std::string& text) {
  if (text.size() < 3 || text[1] != ':' || (text[0] != 'B' && text[0] != 'C')) {
    throw symb::Error(symb::ErrorKind::InvalidArgument, "target must look like B:A or C:A");
  }
  const auto values = parse_list(std::string_view(text).substr(2));
  if (values.size() != 1 || !(values[0] > 0)) {
    throw symb::Error(symb::ErrorKind::InvalidArgument, "target needs one positive capacity");
  }
  return {text[0] == 'B' ? symb::Family::Ball : symb::Family::Cube, values[0]};
}

/// Does the source sit inside the target as a subset?
bool includes(const symb::Shape& source, symb::Family family, double capacity) {
  if (const auto* e = std::get_if<symb::Ellipsoid>(&source)) {
    if (family == symb::Family::Cube) return e->largest() <= capacity;
    const std::vector<double> ball(e->half_dimension(), capacity);
    return symb::linear_embeds(*e, symb::Ellipsoid(ball));
  }
  const auto& p = std::get<symb::Polydisc>(source);
  if (family == symb::Family::Cube) return p.largest() <= capacity;
  double sum = 0;
  for (double x : p.areas()) sum += x;
  return sum <= capacity;
}

std::string rigidity_verdict(const symb::Shape& source, symb::Family family, double capacity) {
  if (includes(source, family, capacity)) return "LINEARLY-EMBEDS";
  if (const auto* e = std::get_if<symb::Ellipsoid>(&source);
      e && family == symb::Family::Ball && symb::pinching_excludes(*e, capacity)) {
    return "EXCLUDED (pinching)";
  }
  const symb::TargetFamily target(family, static_cast<int>(symb::half_dimension(source)));
  const symb::Bound lb = symb::best_lower_bound(source, target);
  if (capacity < lb.value()) {
    return lb.method() == symb::Method::Volume ? "EXCLUDED (volume)" : "EXCLUDED (EH capacity)";
  }
  return "NOT-EXCLUDED";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upper and lower bounds for symplectic embeddings of ellipsoids and polydiscs"};
  app.require_subcommand(1);
  std::function<void()> action;

  // bounds
  std::string problem_name;
  double a_from = 0, a_to = 0, step = 1, acc = 1e-9;
  int half_dim = 2;
  std::string format = "csv";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* bounds = app.add_subcommand("bounds", "Sweep all bounds of a problem over a grid of a");
  bounds->add_option("--problem", problem_name, "EB, EC, PB, PC or PC2n")->required();
  bounds->add_option("--a-from", a_from, "First grid point")->required();
  bounds->add_option("--a-to", a_to, "Last grid point")->required();
  bounds->add_option("--step", step, "Grid step")->capture_default_str();
  bounds->add_option("--acc", acc, "Bisection accuracy")->capture_default_str();
  bounds->add_option("--n", half_dim, "Half-dimension for PC2n")->capture_default_str();
  bounds->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bounds->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  bounds->callback([&] {
    action = [&] {
      const symb::SweepConfig config{symb::ProblemSpec(symb::parse_problem(problem_name), half_dim),
                                     symb::Accuracy(acc)};
      const auto rows = symb::sweep(config, symb::make_grid(a_from, a_to, step), threads);
      std::cout << (format == "json" ? symb::to_json(rows) : symb::to_csv(rows));
    };
  });

  // capacities
  std::vector<double> ellipsoid, polydisc;
  long long count = 0;
  auto* caps = app.add_subcommand("capacities", "First Ekeland-Hofer capacities of a shape");
  auto* opt_e = caps->add_option("--ellipsoid", ellipsoid, "Ellipsoid radii")->delimiter(',');
  auto* opt_p = caps->add_option("--polydisc", polydisc, "Polydisc areas")->delimiter(',');
  opt_e->excludes(opt_p);
  caps->add_option("--count", count, "Number of capacities")->required()->check(CLI::PositiveNumber);
  caps->callback([&] {
    action = [&] {
      if (ellipsoid.empty() == polydisc.empty()) {
        throw symb::Error(symb::ErrorKind::InvalidArgument, "give exactly one of --ellipsoid, --polydisc");
      }
      std::vector<double> values;
      if (!ellipsoid.empty()) {
        values = symb::spectrum_prefix(symb::Ellipsoid(ellipsoid), static_cast<std::size_t>(count)).values;
      } else {
        const symb::Polydisc p(polydisc);
        for (long long k = 1; k <= count; ++k) values.push_back(symb::eh_capacity(p, k));
      }
      std::cout << join(values) << '\n';
    };
  });

  // rigidity
  std::string source_text, target_text;
  auto* rigidity = app.add_subcommand("rigidity", "Decide what the obstructions say about one embedding");
  rigidity->add_option("--source", source_text, "E:r1,r2,... or P:a1,a2,...")->required();
  rigidity->add_option("--target", target_text, "B:A or C:A")->required();
  rigidity->callback([&] {
    action = [&] {
      const auto source = parse_source(source_text);
      const auto [family, capacity] = parse_target(target_text);
      std::cout << rigidity_verdict(source, family, capacity) << '\n';
    };
  });

  // lagrangian
  std::string mode;
  std::vector<long long> ks;
  std::vector<double> a_values;
  auto* lagr = app.add_subcommand("lagrangian", "Lagrangian folding bounds for given k-vectors");
  lagr->add_option("mode", mode, "i-e, i-p, ii-e or ii-p")
      ->required()
      ->check(CLI::IsMember({"i-e", "i-p", "ii-e", "ii-p"}));
  lagr->add_option("--ks", ks, "k_1,k_2,...")->required()->delimiter(',');
  lagr->add_option("--a", a_values, "a (modes i-*) or a_2,...,a_n (modes ii-*)")->required()->delimiter(',');
  lagr->callback([&] {
    action = [&] {
      if (mode == "i-e" || mode == "i-p") {
        if (a_values.size() != 1) throw symb::Error(symb::ErrorKind::InvalidArgument, "mode " + mode + " takes one a");
        const auto b = mode == "i-e" ? symb::ball_bound_M(ks, a_values[0]) : symb::cube_bound_M(ks, a_values[0]);
        std::cout << "A = " << shortest(b.value()) << '\n';
      } else if (mode == "ii-e") {
        std::cout << "A = " << shortest(symb::ball_bound_N(ks, a_values).value()) << '\n';
      } else {
        std::cout << "A = " << join(symb::polydisc_bound_N(ks, a_values)) << '\n';
      }
    };
  });

  // crossover
  std::string left_name, right_name;
  double lo = 0, hi = 0, tol = 1e-6, cross_acc = 1e-9;
  auto* cross = app.add_subcommand("crossover", "Locate where two bound functions cross");
  cross->add_option("--left", left_name, "Bound name, e.g. l_EB")->required();
  cross->add_option("--right", right_name, "Bound name, e.g. s_EB")->required();
  cross->add_option("--lo", lo, "Left end of the bracket")->required();
  cross->add_option("--hi", hi, "Right end of the bracket")->required();
  cross->add_option("--tol", tol, "Bracket width at which to stop")->capture_default_str();
  cross->add_option("--acc", cross_acc, "Accuracy of the folding bisections")->capture_default_str();
  cross->callback([&] {
    action = [&] {
      const symb::Accuracy accuracy(cross_acc);
      const double root = symb::crossover(symb::named_bound(left_name, accuracy),
                                          symb::named_bound(right_name, accuracy), lo, hi, tol);
      std::cout << fixed9(root) << '\n';
    };
  });

  // packing
  auto* packing = app.add_subcommand("packing", "Packing numbers");
  packing->require_subcommand(1);
  int genus = 0;
  double pa = 0, pb = 0;
  bool twisted = false;
  auto* ruled = packing->add_subcommand("ruled", "Ruled surface packed by one ball");
  ruled->add_option("--genus", genus, "Genus of the base")->required();
  ruled->add_option("--a", pa, "First area")->required();
  ruled->add_option("--b", pb, "Second area")->required();
  ruled->add_flag("--twisted", twisted, "Nontrivial bundle");
  ruled->callback([&] {
    action = [&] { std::cout << fixed9(symb::ruled_surface_packing(genus, pa, pb, twisted)) << '\n'; };
  });
  double ja = 0;
  auto* jiang = packing->add_subcommand("jiang", "Lower bound for T^2(1) x Sigma(a)");
  jiang->add_option("--a", ja, "Area of the surface")->required();
  jiang->callback([&] { action = [&] { std::cout << fixed9(symb::jiang_lower_bound(ja)) << '\n'; }; });
  std::string ratio_problem;
  double ra = 0, ratio_acc = 1e-9;
  int ratio_n = 2;
  auto* ratio = packing->add_subcommand("ratio", "Volume share under the best upper bound");
  ratio->add_option("--problem", ratio_problem, "EB, EC, PB, PC or PC2n")->required();
  ratio->add_option("--a", ra, "Problem parameter")->required();
  ratio->add_option("--acc", ratio_acc, "Bisection accuracy")->capture_default_str();
  ratio->add_option("--n", ratio_n, "Half-dimension for PC2n")->capture_default_str();
  ratio->callback([&] {
    action = [&] {
      const symb::ProblemSpec spec(symb::parse_problem(ratio_problem), ratio_n);
      std::cout << fixed9(symb::asymptotic_ratio(spec, ra, symb::Accuracy(ratio_acc))) << '\n';
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (action) action();
  } catch (const symb::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.is_numeric() ? kExitNumeric : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return 0;
}
