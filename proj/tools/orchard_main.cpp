// Command-line surface: coloring, generation, verification, flip
// analysis, oriented/antipodal analysis, lifts, SVG emission.
//
// Exit codes: 0 success, 1 parse/usage (and failed verification), 2
// genericity or other math precondition, 3 generation failure.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orchard/errors.hpp"
#include "orchard/geometry.hpp"
#include "orchard/io.hpp"
#include "orchard/morphism.hpp"
#include "orchard/oriented.hpp"
#include "orchard/verify.hpp"

namespace {

using orchard::json;

struct CommonFlags {
  bool machine = false;  // --json
  bool quiet = false;
  bool timing = false;
};

void add_common(CLI::App* sub, CommonFlags& f) {
  sub->add_flag("--json", f.machine, "Machine-readable report on stdout");
  sub->add_flag("--quiet", f.quiet, "Suppress non-essential output");
  sub->add_flag("--timing", f.timing,
                "Include wall-clock time (off by default so reruns are "
                "byte-identical)");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw orchard::InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

void spill(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw orchard::InputError("cannot write " + path);
  out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

struct LoadedPoints {
  orchard::ParsedPoints parsed;
  std::string digest;
};

LoadedPoints load_points(const std::string& path) {
  const std::string text = slurp(path);
  return {orchard::parse_points_text(text), orchard::input_digest(text)};
}

std::vector<std::string> side_labels(const orchard::TwoPartition& p,
                                     const std::vector<int>& side) {
  std::vector<std::string> out;
  out.reserve(side.size());
  for (int i : side) out.push_back(p.ground().label(i));
  return out;
}

// Class containing the lowest-index point is "cherry" -- the partition is
// only defined up to swapping the two species, so a deterministic
// tiebreak keeps outputs comparable.
json classes_json(const orchard::TwoPartition& p) {
  const auto [cherry, plum] = p.classes();
  return json{{"cherry", side_labels(p, cherry)},
              {"plum", side_labels(p, plum)},
              {"trivial", p.is_trivial()}};
}

std::string joined(const std::vector<std::string>& v) {
  if (v.empty()) return "(none)";
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " ";
    out += v[i];
  }
  return out;
}

void print_classes(std::ostream& os, const orchard::TwoPartition& p) {
  const auto [cherry, plum] = p.classes();
  os << "cherry: " << joined(side_labels(p, cherry)) << "\n";
  os << "plum: " << joined(side_labels(p, plum)) << "\n";
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void finish(const CommonFlags& f, json report, const Stopwatch& watch) {
  if (f.timing) {
    const double ms = watch.ms();
    if (f.machine) {
      report["timing_ms"] = ms;
    } else {
      std::cerr << "time: " << ms << " ms\n";
    }
  }
  if (f.machine) std::cout << dump(report);
}

// ---------------------------------------------------------------- color

struct ColorArgs {
  std::string input;
  std::string svg_path;
  bool show_s = false;
  CommonFlags common;
};

int run_color(const ColorArgs& a) {
  const Stopwatch watch;
  const LoadedPoints in = load_points(a.input);
  if (in.parsed.antipodal) {
    throw orchard::InputError(
        "input is an antipodal line configuration; use the oriented command");
  }
  const orchard::Configuration c =
      orchard::Configuration::make(in.parsed.points, in.parsed.labels);
  if (!a.svg_path.empty() && c.dim() != 2) {
    throw orchard::InputError("--svg requires dimension 2");
  }
  const orchard::TwoPartition p = orchard::geometric_partition(c);

  json report{{"command", "color"},
              {"input_digest", in.digest},
              {"dim", c.dim()},
              {"n", c.size()},
              {"classes", classes_json(p)}};
  if (c.size() >= 3) {
    report["gamma"] = orchard::separation_signs(c).gamma();
  }
  if (a.show_s) {
    json rows = json::array();
    for (int i = 0; i < c.size(); ++i) {
      json row = json::array();
      for (int j = 0; j < c.size(); ++j) {
        row.push_back(i == j ? 0 : orchard::separating_count(c, i, j));
      }
      rows.push_back(std::move(row));
    }
    report["separating_counts"] = std::move(rows);
  }
  if (!a.svg_path.empty()) {
    spill(a.svg_path, orchard::svg_scatter(c, p));
    report["svg"] = a.svg_path;
  }

  if (!a.common.machine) {
    print_classes(std::cout, p);
    if (!a.common.quiet) {
      if (report.contains("gamma")) {
        std::cout << "gamma: " << report["gamma"].get<int>() << "\n";
      }
      if (a.show_s) {
        std::cout << "separating counts:\n";
        for (int i = 0; i < c.size(); ++i) {
          std::cout << "  " << c.labels().label(i) << ":";
          for (int j = 0; j < c.size(); ++j) {
            std::cout << " "
                      << (i == j ? 0 : orchard::separating_count(c, i, j));
          }
          std::cout << "\n";
        }
      }
      if (!a.svg_path.empty()) std::cout << "svg: " << a.svg_path << "\n";
    }
  }
  finish(a.common, std::move(report), watch);
  return 0;
}

// --------------------------------------------------------------- random

struct RandomArgs {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 1;
  std::int64_t range = 0;
  std::string out;
  bool antipodal = false;
  CommonFlags common;
};

int run_random(const RandomArgs& a) {
  const Stopwatch watch;
  json config;
  if (a.antipodal) {
    config = orchard::antipodal_json(
        orchard::random_antipodal(a.n, a.d, a.seed, a.range));
  } else {
    config = orchard::configuration_json(
        orchard::random_generic(a.n, a.d, a.seed, a.range));
  }
  const std::string text = dump(config);

  json report{{"command", "random"}, {"n", a.n},       {"d", a.d},
              {"seed", a.seed},      {"range", a.range},
              {"antipodal", a.antipodal},
              {"digest", orchard::input_digest(text)}};
  if (!a.out.empty()) {
    spill(a.out, text);
    report["out"] = a.out;
    if (!a.common.machine && !a.common.quiet) {
      std::cout << "wrote " << a.out << " (n=" << a.n << ", d=" << a.d
                << ", seed=" << a.seed << ")\n";
    }
  } else if (a.common.machine) {
    report["configuration"] = config;
  } else {
    std::cout << text;
  }
  finish(a.common, std::move(report), watch);
  return 0;
}

// --------------------------------------------------------------- verify

struct VerifyArgs {
  std::string suite = "all";
  orchard::VerifyOptions options;
  bool inject_sigma_bug = false;
  CommonFlags common;
};

int run_verify(const VerifyArgs& a) {
  const Stopwatch watch;
  if (a.inject_sigma_bug) orchard::testing::sigma_sign_error.store(true);

  std::vector<std::pair<std::string, std::vector<orchard::CheckResult>>> runs;
  if (a.suite == "all" || a.suite == "core") {
    runs.emplace_back("core", orchard::verify_core(a.options));
  }
  if (a.suite == "all" || a.suite == "geometry") {
    runs.emplace_back("geometry", orchard::verify_geometry(a.options));
  }
  if (a.suite == "all" || a.suite == "oriented") {
    runs.emplace_back("oriented", orchard::verify_oriented(a.options));
  }
  if (runs.empty()) {
    throw orchard::InputError("unknown suite: " + a.suite +
                              " (expected core, geometry, oriented, or all)");
  }
  orchard::testing::sigma_sign_error.store(false);

  int passed = 0, failed = 0;
  json checks = json::array();
  for (const auto& [suite, results] : runs) {
    for (const orchard::CheckResult& r : results) {
      (r.pass ? passed : failed) += 1;
      checks.push_back(json{{"suite", suite},
                            {"name", r.name},
                            {"pass", r.pass},
                            {"detail", r.detail}});
      if (!a.common.machine && (!r.pass || !a.common.quiet)) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << suite << ":" << r.name;
        if (!r.pass) std::cout << " -- " << r.detail;
        std::cout << "\n";
      }
    }
  }
  json report{{"command", "verify"}, {"suite", a.suite},
              {"seed", a.options.seed}, {"n_max", a.options.n_max},
              {"e_max", a.options.e_max},
              {"configs_per_cell", a.options.configs_per_cell},
              {"injected_bug", a.inject_sigma_bug},
              {"checks", std::move(checks)},
              {"passed", passed},   {"failed", failed}};
  if (!a.common.machine) {
    std::cout << "verify: " << passed << "/" << (passed + failed)
              << " checks passed (suite " << a.suite << ", seed "
              << a.options.seed << ")\n";
  }
  finish(a.common, std::move(report), watch);
  return failed == 0 ? 0 : 1;
}

// ----------------------------------------------------------------- flip

struct FlipArgs {
  std::string a_path;
  std::string b_path;
  CommonFlags common;
};

int run_flip(const FlipArgs& a) {
  const Stopwatch watch;
  const LoadedPoints in_a = load_points(a.a_path);
  const LoadedPoints in_b = load_points(a.b_path);
  if (in_a.parsed.antipodal || in_b.parsed.antipodal) {
    throw orchard::InputError("flip analysis expects plain configurations");
  }
  const orchard::Configuration ca =
      orchard::Configuration::make(in_a.parsed.points, in_a.parsed.labels);
  const orchard::Configuration cb =
      orchard::Configuration::make(in_b.parsed.points, in_b.parsed.labels);
  const orchard::GeometricFlip f = orchard::flip_relation(ca, cb);

  json changed = json::array();
  for (const auto& [x, y] : f.changed_pairs) {
    changed.push_back(json::array(
        {ca.labels().label(x), ca.labels().label(y)}));
  }
  json report{{"command", "flip"},
              {"digest_a", in_a.digest},
              {"digest_b", in_b.digest},
              {"differing_tuples", f.differing_tuples},
              {"is_flip", f.is_flip},
              {"changed_pairs", std::move(changed)},
              {"pattern_ok", f.pattern_ok},
              {"classes_a", classes_json(orchard::geometric_partition(ca))},
              {"classes_b", classes_json(orchard::geometric_partition(cb))}};
  if (f.is_flip) {
    json fs = json::array();
    for (int x : f.flipset) fs.push_back(ca.labels().label(x));
    report["flipset"] = std::move(fs);
  }

  if (!a.common.machine) {
    if (f.is_flip) {
      std::vector<std::string> fs;
      for (int x : f.flipset) fs.push_back(ca.labels().label(x));
      std::cout << "flip: yes\nflipset: " << joined(fs) << "\n";
      std::cout << "changed pairs: " << f.changed_pairs.size() << " ("
                << (f.pattern_ok ? "pattern verified" : "PATTERN VIOLATION")
                << ")\n";
    } else {
      std::cout << "flip: no (" << f.differing_tuples
                << " differing orientation tuples)\n";
    }
  }
  finish(a.common, std::move(report), watch);
  return 0;
}

// ------------------------------------------------------------- oriented

struct OrientedArgs {
  std::string input;
  CommonFlags common;
};

int run_oriented(const OrientedArgs& a) {
  const Stopwatch watch;
  const LoadedPoints in = load_points(a.input);
  if (!in.parsed.antipodal) {
    throw orchard::InputError(
        "oriented analysis expects an antipodal input (\"antipodal\": true)");
  }
  const orchard::AntipodalConfiguration conf =
      orchard::AntipodalConfiguration::make(in.parsed.points,
                                            in.parsed.labels);
  const orchard::OrientedTwoPartition p = orchard::line_structure(conf);
  const int e = conf.lines();
  const int d = conf.dim();

  json report{{"command", "oriented"},
              {"input_digest", in.digest},
              {"e", e},
              {"dim", d},
              {"structure", orchard::oriented_partition_json(p)},
              // The natural-uniqueness argument needs arity < #lines.
              {"uniqueness_regime", d < e}};
  if (e >= 3) {
    report["gamma"] = orchard::ori_sigma_table(orchard::antipodal_phi(conf))
                          .gamma();
  }

  json vectors = json::array();
  if (p.parity() == -1) {
    const auto [side, other] = orchard::semi_orientation_sections(p);
    (void)other;
    for (orchard::OrientedElement x : side) {
      const orchard::VectorR v = conf.vector_of(x);
      json coords = json::array();
      for (int i = 0; i < d; ++i) coords.push_back(v(i).str());
      vectors.push_back(json{{"line", conf.base().quotient().label(x.cls)},
                             {"element", conf.base().id(x)},
                             {"vector", std::move(coords)}});
    }
    report["semi_orientation"] = vectors;
  }

  if (!a.common.machine) {
    std::cout << "lines: " << e << ", dimension " << d << "\n";
    if (p.parity() == -1) {
      std::cout << "parity: odd (semi-orientation)\n";
      for (const auto& entry : vectors) {
        std::cout << "  " << entry["element"].get<std::string>() << " -> (";
        const auto& coords = entry["vector"];
        for (std::size_t i = 0; i < coords.size(); ++i) {
          if (i) std::cout << ", ";
          std::cout << coords[i].get<std::string>();
        }
        std::cout << ")\n";
      }
    } else {
      std::cout << "parity: even (two-partition of the lines)\n";
      print_classes(std::cout, p.quotient_partition());
    }
    if (!a.common.quiet) {
      if (report.contains("gamma")) {
        std::cout << "gamma: " << report["gamma"].get<int>() << "\n";
      }
      std::cout << "uniqueness regime: " << (d < e ? "yes" : "no")
                << " (arity " << d << " on " << e << " lines)\n";
    }
  }
  finish(a.common, std::move(report), watch);
  return 0;
}

// ----------------------------------------------------------------- lift

struct LiftArgs {
  std::string input;
  std::string basis_name = "affine";
  CommonFlags common;
};

orchard::FunctionBasis make_basis(const std::string& name, int point_dim) {
  if (name == "affine") return orchard::FunctionBasis::affine(point_dim);
  if (name == "conic") return orchard::FunctionBasis::conic();
  if (name == "circle") return orchard::FunctionBasis::circle();
  if (name.rfind("interp:", 0) == 0) {
    int deg = 0;
    try {
      deg = std::stoi(name.substr(7));
    } catch (const std::exception&) {
      throw orchard::InputError("bad interpolation degree in " + name);
    }
    return orchard::FunctionBasis::interpolation(deg);
  }
  throw orchard::InputError(
      "unknown basis " + name +
      " (expected affine, conic, circle, or interp:<degree>)");
}

int run_lift(const LiftArgs& a) {
  const Stopwatch watch;
  const LoadedPoints in = load_points(a.input);
  if (in.parsed.antipodal) {
    throw orchard::InputError("lift expects a plain point configuration");
  }
  const orchard::FunctionBasis basis =
      make_basis(a.basis_name, in.parsed.dim);
  if (in.parsed.dim != basis.ambient_dim()) {
    throw orchard::InputError(
        "basis " + basis.name() + " expects points in dimension " +
        std::to_string(basis.ambient_dim()));
  }
  const orchard::MatrixR& pts = in.parsed.points;
  const orchard::Configuration lifted =
      orchard::cgeneric_lift(pts, basis, in.parsed.labels);
  const orchard::TwoPartition p = orchard::geometric_partition(lifted);
  const int n = lifted.size();
  const int big_d = basis.lifted_dim();

  // Independent route: parity of hypersurface separation counts computed
  // downstairs, without the lift.  sigma(p,q) = (-1)^count = gamma when
  // the pair shares a class, so the comparison must go through gamma.
  bool agrees = true;
  if (n >= big_d + 2) {
    const orchard::Sign gamma = orchard::parity_sign(n - 3, big_d - 1);
    for (int q = 1; q < n && agrees; ++q) {
      for (int p_idx = 0; p_idx < q && agrees; ++p_idx) {
        std::vector<int> rest;
        for (int x = 0; x < n; ++x) {
          if (x != p_idx && x != q) rest.push_back(x);
        }
        int odd = 0;
        orchard::for_each_subset(
            n - 2, big_d, [&](std::span<const int> t) {
              std::vector<int> sub;
              sub.reserve(t.size());
              for (int idx : t) {
                sub.push_back(rest[static_cast<std::size_t>(idx)]);
              }
              if (orchard::cgeneric_separating(pts, basis, sub, p_idx, q) < 0) {
                ++odd;
              }
            });
        const orchard::Sign via_counts = (odd % 2 == 0) ? +1 : -1;
        const orchard::Sign via_classes =
            p.in_same_class(p_idx, q) ? gamma : orchard::Sign(-gamma);
        if (via_counts != via_classes) agrees = false;
      }
    }
  }

  json report{{"command", "lift"},
              {"input_digest", in.digest},
              {"basis", basis.name()},
              {"lifted_dim", big_d},
              {"n", n},
              {"classes", classes_json(p)},
              {"separation_agrees", agrees}};
  if (n >= 3) {
    report["gamma"] = orchard::separation_signs(lifted).gamma();
  }

  if (!a.common.machine) {
    std::cout << "basis: " << basis.name() << " (lifted dimension " << big_d
              << ")\n";
    print_classes(std::cout, p);
    if (!a.common.quiet) {
      if (report.contains("gamma")) {
        std::cout << "gamma: " << report["gamma"].get<int>() << "\n";
      }
      std::cout << "separation agreement: "
                << (agrees ? "verified" : "FAILED") << "\n";
    }
  }
  finish(a.common, std::move(report), watch);
  return agrees ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-partitions from signed functions: coloring, generation, "
      "verification, flips, oriented lines, lifts"};
  app.require_subcommand(1);

  ColorArgs color_args;
  CLI::App* color =
      app.add_subcommand("color", "Two-class partition of a configuration");
  color->add_option("input", color_args.input, "Configuration JSON file")
      ->required();
  color->add_flag("--show-s", color_args.show_s,
                  "Print the separating-count matrix");
  color->add_option("--svg", color_args.svg_path,
                    "Write an SVG scatter plot (dimension 2 only)");
  add_common(color, color_args.common);

  RandomArgs random_args;
  CLI::App* random =
      app.add_subcommand("random", "Generate a random generic configuration");
  random->add_option("--n", random_args.n, "Number of points (or lines)")
      ->required();
  random->add_option("--d", random_args.d, "Dimension")->required();
  random->add_option("--seed", random_args.seed, "RNG seed");
  random->add_option("--range", random_args.range,
                     "Coordinate range (default 10*n*d)");
  random->add_option("--out", random_args.out, "Output file (default stdout)");
  random->add_flag("--antipodal", random_args.antipodal,
                   "Generate an antipodal line configuration");
  add_common(random, random_args.common);

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify", "Run the property-verification suites");
  verify->add_option("--suite", verify_args.suite,
                     "core, geometry, oriented, or all");
  verify->add_option("--n-max", verify_args.options.n_max,
                     "Largest ground set in randomized core checks");
  verify->add_option("--e-max", verify_args.options.e_max,
                     "Largest class count in randomized oriented checks");
  verify->add_option("--configs", verify_args.options.configs_per_cell,
                     "Random configurations per (d, n) cell");
  verify->add_option("--seed", verify_args.options.seed, "RNG seed");
  verify
      ->add_flag("--inject-sigma-bug", verify_args.inject_sigma_bug,
                 "Test-only: negate every pair sign before use")
      ->group("");
  add_common(verify, verify_args.common);

  FlipArgs flip_args;
  CLI::App* flip =
      app.add_subcommand("flip", "Compare two configurations for a flip");
  flip->add_option("--a", flip_args.a_path, "First configuration JSON")
      ->required();
  flip->add_option("--b", flip_args.b_path, "Second configuration JSON")
      ->required();
  add_common(flip, flip_args.common);

  OrientedArgs oriented_args;
  CLI::App* oriented = app.add_subcommand(
      "oriented", "Structure of an antipodal line configuration");
  oriented->add_option("--input", oriented_args.input, "Antipodal JSON file")
      ->required();
  add_common(oriented, oriented_args.common);

  LiftArgs lift_args;
  CLI::App* lift = app.add_subcommand(
      "lift", "Partition induced by a function-basis lift");
  lift->add_option("--input", lift_args.input, "Points JSON file")
      ->required();
  lift->add_option("--basis", lift_args.basis_name,
                   "affine, conic, circle, or interp:<degree>");
  add_common(lift, lift_args.common);

  try {
    app.parse(argc, argv);
    if (*color) return run_color(color_args);
    if (*random) return run_random(random_args);
    if (*verify) return run_verify(verify_args);
    if (*flip) return run_flip(flip_args);
    if (*oriented) return run_oriented(oriented_args);
    if (*lift) return run_lift(lift_args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const orchard::GenericityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const orchard::TripleConstantError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const orchard::GenerationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const orchard::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
