#pragma once

// Two-partitions of a finite ground set and pairwise sign tables.
//
// A two-partition is an unordered split E = A | B (either side may be
// empty).  It is stored as a +/-1 labeling alpha : E -> {±1} canonicalized
// so the first element carries +1; with pointwise multiplication the
// two-partitions of E form an elementary abelian 2-group of order 2^(n-1).
//
// A PairwiseSign is a symmetric map sigma on unordered pairs whose triple
// products sigma(x,y)sigma(y,z)sigma(x,z) are constant; that constant is
// the table's gamma (+1 by convention when n <= 2).  Such tables are
// exactly the maps gamma * alpha(x)alpha(y), and the partition they induce
// is recovered either from a base point or from the component structure of
// the agreement graph.

#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orchard/ground.hpp"

namespace orchard {

class TwoPartition {
 public:
  // Canonicalizes: stored labeling is divided by the first entry.
  TwoPartition(GroundSet ground, std::vector<Sign> alpha);
  static TwoPartition trivial(GroundSet ground);
  // Builds from named labels; every ground label must be present.
  static TwoPartition from_label_signs(
      GroundSet ground, const std::unordered_map<std::string, Sign>& signs);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Sign alpha(int i) const { return alpha_[static_cast<std::size_t>(i)]; }
  const std::vector<Sign>& labeling() const { return alpha_; }

  bool in_same_class(int i, int j) const { return alpha(i) == alpha(j); }
  bool is_trivial() const;

  // Both classes as increasing index lists; .first contains element 0.
  std::pair<std::vector<int>, std::vector<int>> classes() const;

  TwoPartition permuted(const Permutation& p) const;

  friend TwoPartition operator*(const TwoPartition& a, const TwoPartition& b);
  friend bool operator==(const TwoPartition& a, const TwoPartition& b) {
    return a.ground_ == b.ground_ && a.alpha_ == b.alpha_;
  }

 private:
  GroundSet ground_;
  std::vector<Sign> alpha_;
};

// Pairs (i, j) on which two partitions disagree about "same class",
// i < j, in colex order.
std::vector<std::pair<int, int>> relation_difference(const TwoPartition& a,
                                                     const TwoPartition& b);

class PairwiseSign {
 public:
  // Checked: derives gamma from the first triple and verifies every other
  // triple matches, else throws TripleConstantError with a witness.
  PairwiseSign(GroundSet ground, std::vector<Sign> table);
  // Unchecked fast path for callers that already know gamma.
  static PairwiseSign with_known_gamma(GroundSet ground,
                                       std::vector<Sign> table, Sign gamma);
  // Checked construction from a callable sigma(i, j).
  static PairwiseSign from_function(
      GroundSet ground, const std::function<Sign(int, int)>& sigma);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Sign gamma() const { return gamma_; }
  Sign sigma(int i, int j) const;
  const std::vector<Sign>& table() const { return table_; }

  // Colex rank of the unordered pair: C(max,2) + min.
  static std::size_t pair_rank(int i, int j);

  PairwiseSign permuted(const Permutation& p) const;

  friend bool operator==(const PairwiseSign& a, const PairwiseSign& b) {
    return a.ground_ == b.ground_ && a.table_ == b.table_;
  }

 private:
  PairwiseSign(GroundSet ground, std::vector<Sign> table, Sign gamma, int);
  GroundSet ground_;
  std::vector<Sign> table_;
  Sign gamma_;
};

// Recovers the partition from a base point: alpha(base) = +1 and
// alpha(x) = gamma * sigma(x, base).  Returns {partition, gamma}.  The
// result is independent of the base point.
std::pair<TwoPartition, Sign> partition_from_pairwise(const PairwiseSign& s,
                                                      int base = 0);

// Independent route: components of the agreement graph (edges where
// sigma(x,y) equals the triple constant).  Verifies the structure -- at
// most two components, each a clique -- and throws TripleConstantError
// otherwise, so it doubles as a validator for raw tables.
std::pair<TwoPartition, Sign> complete_components(const GroundSet& ground,
                                                  const std::vector<Sign>& table);

}  // namespace orchard
