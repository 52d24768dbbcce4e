#pragma once

// Exact linear algebra: Eigen dense types over the Rational scalar.
//
// NumTraits pins epsilon and dummy_precision to exact zero, so pivoting
// decisions and rank thresholds are exact -- FullPivLU reports the true
// rank, and determinants of singular matrices come out exactly zero
// (Eigen's unblocked LU skips elimination when the remaining pivot column
// vanishes, so no division by zero occurs).

#include <Eigen/Dense>

#include "orchard/errors.hpp"
#include "orchard/rational.hpp"

namespace Eigen {
template <>
struct NumTraits<orchard::Rational> : GenericNumTraits<orchard::Rational> {
  typedef orchard::Rational Real;
  typedef orchard::Rational NonInteger;
  typedef orchard::Rational Nested;
  static inline Real epsilon() { return orchard::Rational(0); }
  static inline Real dummy_precision() { return orchard::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};
}  // namespace Eigen

namespace orchard {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using MatrixR = Matrix<Rational>;
using VectorR = Vector<Rational>;

// Sign of det(m) in {-1, 0, +1}.
template <typename Derived>
int determinant_sign(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  typename Derived::PlainObject mat = m;
  Scalar d = mat.determinant();
  if (d > Scalar(0)) return +1;
  if (d < Scalar(0)) return -1;
  return 0;
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  Eigen::FullPivLU<typename Derived::PlainObject> lu(m);
  return lu.rank();
}

// Orientation of the simplex spanned by d+1 points given as the columns
// of a d x (d+1) matrix: sign of det(p_1 - p_0, ..., p_d - p_0).
template <typename Derived>
int simplex_orientation(const Eigen::MatrixBase<Derived>& points) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index d = points.rows();
  if (points.cols() != d + 1) {
    throw InputError("simplex_orientation: need d+1 points in dimension d");
  }
  Matrix<Scalar> edges(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    edges.col(j) = points.col(j + 1) - points.col(0);
  }
  return determinant_sign(edges);
}

}  // namespace orchard
