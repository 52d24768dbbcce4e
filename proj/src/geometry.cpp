#include "orchard/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace orchard {

namespace {

std::string witness_text(const GroundSet& labels,
                         const std::vector<int>& witness) {
  std::string out = "{";
  for (std::size_t i = 0; i < witness.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels.label(witness[i]);
  }
  out += "}";
  return out;
}

GroundSet resolve_labels(GroundSet labels, int n, const char* what,
                         std::string_view prefix = "P") {
  if (labels.size() == 0 && n > 0) return GroundSet::indexed(n, prefix);
  if (labels.size() != n) {
    throw InputError(std::string(what) + ": label count mismatch");
  }
  return labels;
}

}  // namespace

std::optional<std::vector<int>> genericity_witness(const MatrixR& points) {
  const int d = static_cast<int>(points.rows());
  const int n = static_cast<int>(points.cols());
  if (d < 1) throw InputError("configuration: dimension must be positive");

  if (n <= d + 1) {
    if (n <= 1) return std::nullopt;
    MatrixR edges(d, n - 1);
    for (int j = 1; j < n; ++j) edges.col(j - 1) = points.col(j) - points.col(0);
    if (exact_rank(edges) == n - 1) return std::nullopt;
    std::vector<int> all(static_cast<std::size_t>(n));
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  std::optional<std::vector<int>> witness;
  MatrixR simplex(d, d + 1);
  for_each_subset(n, d + 1, [&](std::span<const int> t) {
    if (witness) return;
    for (std::size_t i = 0; i < t.size(); ++i) {
      simplex.col(static_cast<Eigen::Index>(i)) = points.col(t[i]);
    }
    if (simplex_orientation(simplex) == 0) {
      witness = std::vector<int>(t.begin(), t.end());
    }
  });
  return witness;
}

Configuration::Configuration(MatrixR points, GroundSet labels)
    : points_(std::move(points)), labels_(std::move(labels)) {}

Configuration Configuration::make(MatrixR points, GroundSet labels) {
  const int n = static_cast<int>(points.cols());
  if (n < 1) throw InputError("configuration: need at least one point");
  GroundSet resolved = resolve_labels(std::move(labels), n, "configuration");
  if (auto w = genericity_witness(points)) {
    const std::string msg =
        "configuration is not generic: affinely dependent subset " +
        witness_text(resolved, *w);
    throw GenericityError(msg, std::move(*w));
  }
  return Configuration(std::move(points), std::move(resolved));
}

SignFunction orientation_function(const Configuration& c) {
  const int d = c.dim();
  const int n = c.size();
  if (n < d + 1) {
    throw InputError("orientation function: need at least d+1 points");
  }
  std::vector<Sign> table(binomial(n, d + 1));
  MatrixR simplex(d, d + 1);
  for_each_subset(n, d + 1, [&](std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      simplex.col(static_cast<Eigen::Index>(i)) = c.points().col(t[i]);
    }
    const int o = simplex_orientation(simplex);
    if (o == 0) throw std::logic_error("orientation: degenerate simplex");
    table[subset_rank(t)] = o;
  });
  return SignFunction(c.labels(), d + 1, -1, std::move(table));
}

std::int64_t separating_count(const Configuration& c, int p, int q) {
  const int d = c.dim();
  const int n = c.size();
  if (p == q || p < 0 || q < 0 || p >= n || q >= n) {
    throw InputError("separating count: need two distinct points");
  }
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n - 2));
  for (int x = 0; x < n; ++x) {
    if (x != p && x != q) rest.push_back(x);
  }
  std::int64_t count = 0;
  MatrixR simplex(d, d + 1);
  for_each_subset(n - 2, d, [&](std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      simplex.col(static_cast<Eigen::Index>(i)) =
          c.points().col(rest[static_cast<std::size_t>(s[i])]);
    }
    simplex.col(d) = c.points().col(p);
    const int op = simplex_orientation(simplex);
    simplex.col(d) = c.points().col(q);
    const int oq = simplex_orientation(simplex);
    if (op == 0 || oq == 0) {
      throw std::logic_error("separating count: degenerate simplex");
    }
    if (op != oq) ++count;
  });
  return count;
}

PairwiseSign separation_signs(const Configuration& c) {
  const int n = c.size();
  const int d = c.dim();
  std::vector<Sign> table(binomial(n, 2));
  for (int q = 1; q < n; ++q) {
    for (int p = 0; p < q; ++p) {
      table[PairwiseSign::pair_rank(p, q)] =
          (separating_count(c, p, q) % 2 == 0) ? +1 : -1;
    }
  }
  PairwiseSign s(c.labels(), std::move(table));  // checked
  if (n >= 3 && s.gamma() != parity_sign(n - 3, d - 1)) {
    throw std::logic_error("separation signs: unexpected triple constant");
  }
  return s;
}

TwoPartition geometric_partition(const Configuration& c) {
  return partition_from_pairwise(separation_signs(c)).first;
}

GeometricFlip flip_relation(const Configuration& a, const Configuration& b) {
  if (a.dim() != b.dim() || !(a.labels() == b.labels())) {
    throw InputError("flip relation: configurations must share labels and dimension");
  }
  const int d = a.dim();
  const int n = a.size();

  GeometricFlip out;
  if (n >= d + 1) {
    const SignFunction fa = orientation_function(a);
    const SignFunction fb = orientation_function(b);
    for_each_subset(n, d + 1, [&](std::span<const int> t) {
      if (fa.at_sorted(t) != fb.at_sorted(t)) {
        ++out.differing_tuples;
        if (out.differing_tuples == 1) {
          out.flipset.assign(t.begin(), t.end());
        }
      }
    });
  }
  out.is_flip = (out.differing_tuples == 1);
  if (!out.is_flip) out.flipset.clear();

  out.changed_pairs =
      relation_difference(geometric_partition(a), geometric_partition(b));
  if (out.is_flip) {
    std::vector<bool> in_x(static_cast<std::size_t>(n), false);
    for (int v : out.flipset) in_x[static_cast<std::size_t>(v)] = true;
    std::vector<std::pair<int, int>> expected;
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (in_x[static_cast<std::size_t>(i)] !=
            in_x[static_cast<std::size_t>(j)]) {
          expected.emplace_back(i, j);
        }
      }
    }
    out.pattern_ok = (out.changed_pairs == expected);
  }
  return out;
}

FunctionBasis::FunctionBasis(Kind kind, std::string name, int ambient,
                             int lifted, int deg)
    : kind_(kind), name_(std::move(name)), ambient_(ambient), lifted_(lifted),
      degree_(deg) {}

FunctionBasis FunctionBasis::affine(int ambient_dim) {
  if (ambient_dim < 1) throw InputError("affine basis: positive dimension");
  return FunctionBasis(Kind::Affine, "affine", ambient_dim, ambient_dim, 0);
}

FunctionBasis FunctionBasis::conic() {
  return FunctionBasis(Kind::Conic, "conic", 2, 5, 0);
}

FunctionBasis FunctionBasis::circle() {
  return FunctionBasis(Kind::Circle, "circle", 2, 3, 0);
}

FunctionBasis FunctionBasis::interpolation(int degree) {
  if (degree < 0) throw InputError("interpolation basis: degree must be >= 0");
  return FunctionBasis(Kind::Interpolation,
                       "interp:" + std::to_string(degree), 2, degree + 1,
                       degree);
}

VectorR FunctionBasis::lift(const VectorR& x) const {
  if (static_cast<int>(x.size()) != ambient_) {
    throw InputError("basis lift: point dimension mismatch");
  }
  VectorR out(lifted_);
  switch (kind_) {
    case Kind::Affine:
      out = x;
      break;
    case Kind::Conic:
      out(0) = x(0);
      out(1) = x(1);
      out(2) = x(0) * x(0);
      out(3) = x(0) * x(1);
      out(4) = x(1) * x(1);
      break;
    case Kind::Circle:
      out(0) = x(0);
      out(1) = x(1);
      out(2) = x(0) * x(0) + x(1) * x(1);
      break;
    case Kind::Interpolation: {
      Rational p = x(0);
      for (int i = 0; i < degree_; ++i) {
        out(i) = p;
        p *= x(0);
      }
      out(degree_) = x(1);
      break;
    }
  }
  return out;
}

void FunctionBasis::validate_points(const MatrixR& points) const {
  if (static_cast<int>(points.rows()) != ambient_) {
    throw InputError("basis: point dimension mismatch");
  }
  // Degree 0 interpolants are horizontal lines; only positive degrees
  // solve for coefficients and need distinct abscissas.
  if (kind_ == Kind::Interpolation && degree_ >= 1) {
    const int n = static_cast<int>(points.cols());
    for (int j = 1; j < n; ++j) {
      for (int i = 0; i < j; ++i) {
        if (points(0, i) == points(0, j)) {
          throw InputError(
              "interpolation basis: abscissas must be pairwise distinct "
              "(points " +
              std::to_string(i) + " and " + std::to_string(j) + ")");
        }
      }
    }
  }
}

Configuration cgeneric_lift(const MatrixR& points, const FunctionBasis& basis,
                            GroundSet labels) {
  basis.validate_points(points);
  const int n = static_cast<int>(points.cols());
  GroundSet resolved = resolve_labels(std::move(labels), n, "lift");
  MatrixR lifted(basis.lifted_dim(), n);
  for (int j = 0; j < n; ++j) {
    lifted.col(j) = basis.lift(points.col(j));
  }
  try {
    return Configuration::make(std::move(lifted), std::move(resolved));
  } catch (const GenericityError& e) {
    throw GenericityError(
        "points are degenerate for the " + basis.name() +
            " basis (dependent lifted subset): " + e.what(),
        e.witness());
  }
}

int cgeneric_separating(const MatrixR& points, const FunctionBasis& basis,
                        std::span<const int> s_subset, int p, int q) {
  basis.validate_points(points);
  const int n = static_cast<int>(points.cols());
  const int D = basis.lifted_dim();
  if (static_cast<int>(s_subset.size()) != D) {
    throw InputError("separation test: subset size must match the basis");
  }
  if (p == q || p < 0 || q < 0 || p >= n || q >= n) {
    throw InputError("separation test: need two distinct points");
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int v : s_subset) {
    if (v < 0 || v >= n || used[static_cast<std::size_t>(v)] || v == p ||
        v == q) {
      throw InputError("separation test: subset must avoid p, q and repeats");
    }
    used[static_cast<std::size_t>(v)] = true;
  }

  // Hypersurface side via bordered determinants in lifted coordinates:
  // rows (1, b(x)) for x = candidate point then the subset points.
  MatrixR m(D + 1, D + 1);
  auto fill_rows = [&](int candidate) {
    m(0, 0) = Rational(1);
    m.block(0, 1, 1, D) = basis.lift(points.col(candidate)).transpose();
    for (int i = 0; i < D; ++i) {
      m(i + 1, 0) = Rational(1);
      m.block(i + 1, 1, 1, D) =
          basis.lift(points.col(s_subset[static_cast<std::size_t>(i)]))
              .transpose();
    }
  };
  fill_rows(p);
  const int dp = determinant_sign(m);
  fill_rows(q);
  const int dq = determinant_sign(m);
  if (dp == 0 || dq == 0) {
    std::vector<int> w(s_subset.begin(), s_subset.end());
    w.push_back(dp == 0 ? p : q);
    std::sort(w.begin(), w.end());
    throw GenericityError(
        "separation test: degenerate subset for the " + basis.name() +
            " basis",
        std::move(w));
  }
  return dp * dq;
}

AntipodalConfiguration::AntipodalConfiguration(MatrixR reps, OrientableSet base)
    : reps_(std::move(reps)), base_(std::move(base)) {}

AntipodalConfiguration AntipodalConfiguration::make(MatrixR representatives,
                                                    GroundSet line_labels) {
  const int d = static_cast<int>(representatives.rows());
  const int e = static_cast<int>(representatives.cols());
  if (d < 1) throw InputError("antipodal configuration: positive dimension");
  if (e < 1) throw InputError("antipodal configuration: need at least one line");
  GroundSet labels = resolve_labels(std::move(line_labels), e, "antipodal", "L");

  // Canonical representative per line: first nonzero coordinate positive.
  for (int j = 0; j < e; ++j) {
    int lead = -1;
    for (int i = 0; i < d; ++i) {
      if (!representatives(i, j).is_zero()) {
        lead = i;
        break;
      }
    }
    if (lead == -1) {
      throw InputError("antipodal configuration: zero vector for line " +
                       labels.label(j));
    }
    if (representatives(lead, j).sign() < 0) {
      representatives.col(j) = -representatives.col(j);
    }
  }

  // Linear genericity: every min(e, d)-subset of lines is independent.
  std::optional<std::vector<int>> witness;
  if (e <= d) {
    if (exact_rank(representatives) < e) {
      witness = std::vector<int>(static_cast<std::size_t>(e));
      std::iota(witness->begin(), witness->end(), 0);
    }
  } else {
    MatrixR sub(d, d);
    for_each_subset(e, d, [&](std::span<const int> t) {
      if (witness) return;
      for (std::size_t i = 0; i < t.size(); ++i) {
        sub.col(static_cast<Eigen::Index>(i)) = representatives.col(t[i]);
      }
      if (determinant_sign(sub) == 0) {
        witness = std::vector<int>(t.begin(), t.end());
      }
    });
  }
  if (witness) {
    const std::string msg =
        "antipodal configuration is not generic: dependent lines " +
        witness_text(labels, *witness);
    throw GenericityError(msg, std::move(*witness));
  }

  std::vector<std::pair<std::string, std::string>> ids;
  ids.reserve(static_cast<std::size_t>(e));
  for (int j = 0; j < e; ++j) {
    ids.emplace_back(labels.label(j) + "+", labels.label(j) + "-");
  }
  return AntipodalConfiguration(std::move(representatives),
                                OrientableSet(std::move(labels), std::move(ids)));
}

VectorR AntipodalConfiguration::vector_of(OrientedElement x) const {
  if (x.cls < 0 || x.cls >= lines()) {
    throw InputError("antipodal configuration: line index out of range");
  }
  VectorR v = reps_.col(x.cls);
  return x.neg ? VectorR(-v) : v;
}

OrientedSignFunction antipodal_phi(const AntipodalConfiguration& a) {
  const int d = a.dim();
  const int e = a.lines();
  if (e < d) {
    throw InputError("antipodal orientation: need at least d lines");
  }
  std::vector<Sign> table(binomial(e, d));
  MatrixR sub(d, d);
  for_each_subset(e, d, [&](std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      sub.col(static_cast<Eigen::Index>(i)) = a.representatives().col(t[i]);
    }
    const int o = determinant_sign(sub);
    if (o == 0) throw std::logic_error("antipodal orientation: singular subset");
    table[subset_rank(t)] = o;
  });
  return OrientedSignFunction(a.base(), d, -1, -1, std::move(table));
}

OrientedTwoPartition line_structure(const AntipodalConfiguration& a) {
  return ori_rho(antipodal_phi(a));
}

namespace {

std::int64_t default_range(std::int64_t range, int n, int d) {
  return range > 0 ? range : static_cast<std::int64_t>(10) * n * d;
}

}  // namespace

Configuration random_generic(int n, int dim, std::uint64_t seed,
                             std::int64_t range, int max_retries) {
  if (n < 1 || dim < 1) {
    throw InputError("random configuration: need n >= 1, d >= 1");
  }
  const std::int64_t m = default_range(range, n, dim);
  Rng rng(seed);
  MatrixR pts(dim, n);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < dim; ++i) {
        pts(i, j) = Rational(static_cast<long long>(rng.range(-m, m)));
      }
    }
    if (!genericity_witness(pts)) {
      return Configuration::make(pts, GroundSet::indexed(n));
    }
  }
  throw GenerationError("random configuration: retry budget exhausted");
}

MatrixR random_cgeneric_points(int n, const FunctionBasis& basis,
                               std::uint64_t seed, std::int64_t range,
                               int max_retries) {
  if (n < 1) throw InputError("random points: need n >= 1");
  const std::int64_t m = default_range(range, n, basis.lifted_dim());
  Rng rng(seed);
  MatrixR pts(basis.ambient_dim(), n);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < basis.ambient_dim(); ++i) {
        pts(i, j) = Rational(static_cast<long long>(rng.range(-m, m)));
      }
    }
    try {
      (void)cgeneric_lift(pts, basis);
      return pts;
    } catch (const GenericityError&) {
    } catch (const InputError&) {
      // e.g. colliding interpolation abscissas; resample.
    }
  }
  throw GenerationError("random points: retry budget exhausted");
}

AntipodalConfiguration random_antipodal(int lines, int dim, std::uint64_t seed,
                                        std::int64_t range, int max_retries) {
  if (lines < 1 || dim < 1) {
    throw InputError("random antipodal: need e >= 1, d >= 1");
  }
  const std::int64_t m = default_range(range, lines, dim);
  Rng rng(seed);
  MatrixR reps(dim, lines);
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    for (int j = 0; j < lines; ++j) {
      for (int i = 0; i < dim; ++i) {
        reps(i, j) = Rational(static_cast<long long>(rng.range(-m, m)));
      }
    }
    try {
      return AntipodalConfiguration::make(reps);
    } catch (const GenericityError&) {
    } catch (const InputError&) {
      // zero column; resample.
    }
  }
  throw GenerationError("random antipodal: retry budget exhausted");
}

}  // namespace orchard
