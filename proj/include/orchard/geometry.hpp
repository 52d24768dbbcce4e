#pragma once

// Geometric realization on exact-rational point configurations.
//
// A configuration of n labeled points in R^d is generic when every subset
// of at most d+1 points is affinely independent.  Its orientation function
// phi(x_0..x_d) = sign det(x_1-x_0, ..., x_d-x_0) is an antisymmetric sign
// function of arity d+1, and the Orchard partition it induces has a purely
// geometric description: P and Q land in the same class iff the number
// s(P,Q) of (d-subset)-hyperplanes separating them is congruent to
// C(n-3, d-1) mod 2.  Equivalently sigma(P,Q) = (-1)^s(P,Q) with
// gamma = (-1)^C(n-3, d-1).
//
// Function bases (affine / conic / circle / interpolation) transport the
// picture to curved separators via the lift x -> (b_1(x), ..., b_D(x)).
//
// Antipodal configurations (one representative per line through the
// origin, canonicalized) realize the oriented variant: phi = linear
// orientation determinant, odd in each argument.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orchard/linalg.hpp"
#include "orchard/oriented.hpp"
#include "orchard/signfn.hpp"
#include "orchard/twopart.hpp"

namespace orchard {

// nullopt when generic; otherwise one violating index subset (the whole
// set when n <= d+1, else a degenerate (d+1)-subset in colex order).
std::optional<std::vector<int>> genericity_witness(const MatrixR& points);

class Configuration {
 public:
  // points: d x n, one column per point.  Validates genericity
  // (GenericityError with witness) and label count.
  static Configuration make(MatrixR points, GroundSet labels = GroundSet());

  int dim() const { return static_cast<int>(points_.rows()); }
  int size() const { return static_cast<int>(points_.cols()); }
  const MatrixR& points() const { return points_; }
  const GroundSet& labels() const { return labels_; }

 private:
  Configuration(MatrixR points, GroundSet labels);
  MatrixR points_;
  GroundSet labels_;
};

// The antisymmetric orientation function of arity d+1 (needs n >= d+1).
SignFunction orientation_function(const Configuration& c);

// Number of d-subsets of the other points whose affine hull separates
// points p and q.
std::int64_t separating_count(const Configuration& c, int p, int q);

// The pairwise table sigma(P,Q) = (-1)^s(P,Q) (checked; its gamma always
// equals (-1)^C(n-3, d-1)).
PairwiseSign separation_signs(const Configuration& c);

// The induced two-partition, computed via separating counts.
TwoPartition geometric_partition(const Configuration& c);

struct GeometricFlip {
  // Number of (d+1)-subsets on which the two orientation functions differ.
  std::size_t differing_tuples = 0;
  bool is_flip = false;           // differing_tuples == 1
  std::vector<int> flipset;       // the tuple, when is_flip
  std::vector<std::pair<int, int>> changed_pairs;  // partition relation delta
  bool pattern_ok = false;        // delta == flipset x complement
};

// Compares two configurations with the same labels and dimension.
GeometricFlip flip_relation(const Configuration& a, const Configuration& b);

// A finite family 1, b_1, ..., b_D of functions on R^k; "hypersurfaces"
// are zero sets of affine combinations, and points lift to
// (b_1(x), ..., b_D(x)) in R^D.
class FunctionBasis {
 public:
  static FunctionBasis affine(int ambient_dim);  // b_i = coordinates
  static FunctionBasis conic();    // k=2: x, y, x^2, xy, y^2 (D = 5)
  static FunctionBasis circle();   // k=2: x, y, x^2 + y^2      (D = 3)
  // k=2: x, x^2, ..., x^degree, y  -- graphs of degree-bounded
  // polynomials; abscissas must be pairwise distinct when degree >= 1
  // (degree 0 separates by horizontal lines and has no such constraint).
  static FunctionBasis interpolation(int degree);

  const std::string& name() const { return name_; }
  int ambient_dim() const { return ambient_; }
  int lifted_dim() const { return lifted_; }

  VectorR lift(const VectorR& x) const;
  // Checks basis-specific input preconditions (InputError).
  void validate_points(const MatrixR& points) const;

 private:
  enum class Kind { Affine, Conic, Circle, Interpolation };
  FunctionBasis(Kind kind, std::string name, int ambient, int lifted, int deg);
  Kind kind_;
  std::string name_;
  int ambient_;
  int lifted_;
  int degree_;
};

// Lifts a k x n matrix of points through the basis and builds the
// configuration in R^D; degeneracy of the lift surfaces as a
// GenericityError whose witness names the offending input points.
Configuration cgeneric_lift(const MatrixR& points, const FunctionBasis& basis,
                            GroundSet labels = GroundSet());

// Side test downstairs, without lifting: for a D-subset S of point
// indices, the basis hypersurface through S either separates p and q
// (-1) or not (+1).  Decided by two (D+1)x(D+1) determinants in lifted
// coordinates; zero determinant => GenericityError.
int cgeneric_separating(const MatrixR& points, const FunctionBasis& basis,
                        std::span<const int> s_subset, int p, int q);

class AntipodalConfiguration {
 public:
  // representatives: d x e, one nonzero column per line through the
  // origin.  Canonicalized so each column's first nonzero coordinate is
  // positive; every d-subset of lines must be linearly independent.
  static AntipodalConfiguration make(MatrixR representatives,
                                     GroundSet line_labels = GroundSet());

  int dim() const { return static_cast<int>(reps_.rows()); }
  int lines() const { return static_cast<int>(reps_.cols()); }
  const MatrixR& representatives() const { return reps_; }
  const OrientableSet& base() const { return base_; }
  VectorR vector_of(OrientedElement x) const;

 private:
  AntipodalConfiguration(MatrixR reps, OrientableSet base);
  MatrixR reps_;
  OrientableSet base_;
};

// The linear orientation determinant as an odd antisymmetric function of
// arity d (needs e >= d).
OrientedSignFunction antipodal_phi(const AntipodalConfiguration& a);

// ori_rho of antipodal_phi; parity is (-1)^C(e-2, d-1), so the result is
// a semi-orientation exactly when C(e-2, d-1) is odd.
OrientedTwoPartition line_structure(const AntipodalConfiguration& a);

// Seeded generic generators (rejection sampling over integer coordinates
// in [-range, range]; range 0 picks 10 * n * d).  GenerationError after
// max_retries rejections.
Configuration random_generic(int n, int dim, std::uint64_t seed,
                             std::int64_t range = 0, int max_retries = 1000);
MatrixR random_cgeneric_points(int n, const FunctionBasis& basis,
                               std::uint64_t seed, std::int64_t range = 0,
                               int max_retries = 1000);
AntipodalConfiguration random_antipodal(int lines, int dim,
                                        std::uint64_t seed,
                                        std::int64_t range = 0,
                                        int max_retries = 1000);

}  // namespace orchard
