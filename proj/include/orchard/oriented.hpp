#pragma once

// Involution-equivariant (oriented) variant.
//
// An OrientableSet is a set of 2e elements carrying a fixed-point-free
// involution iota: each of e quotient classes has a positive and a
// negative copy.  Functions and partitions split by parity: even objects
// are blind to iota (and reduce to the plain theory on the quotient), odd
// objects negate / switch sides under it.  Odd two-partitions are the
// semi-orientations: splits of E into a section and its antipode.
//
// The morphism transfers: for phi of arity l on e classes,
//   parity(sigma_phi) = parity(phi)^C(e-2, l-1),
//   gamma(sigma_phi)  = signature(phi)^C(e-3, l-2),
// and rho(phi) is the induced oriented two-partition.  All of it is
// equivariant under Sym(E, iota) = signed permutations of the classes.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "orchard/ground.hpp"
#include "orchard/signfn.hpp"
#include "orchard/twopart.hpp"

namespace orchard {

// One of the two copies of a quotient class.
struct OrientedElement {
  int cls = 0;
  bool neg = false;

  friend bool operator==(OrientedElement a, OrientedElement b) {
    return a.cls == b.cls && a.neg == b.neg;
  }
};

class OrientableSet {
 public:
  OrientableSet();  // empty
  // Quotient labels plus one (positive id, negative id) pair per class;
  // all 2e element ids must be distinct (and distinct from each other).
  OrientableSet(GroundSet quotient,
                std::vector<std::pair<std::string, std::string>> copy_ids);
  // Classes L0..L{e-1} with ids "L0+", "L0-", ...
  static OrientableSet standard(int e);

  int classes() const { return quotient_.size(); }
  const GroundSet& quotient() const { return quotient_; }
  const std::string& id(OrientedElement x) const;
  OrientedElement involution(OrientedElement x) const {
    return {x.cls, !x.neg};
  }

  friend bool operator==(const OrientableSet& a, const OrientableSet& b) {
    return a.quotient_ == b.quotient_ && a.ids_ == b.ids_;
  }

 private:
  GroundSet quotient_;
  std::vector<std::pair<std::string, std::string>> ids_;
};

// Element of Sym(E, iota): a permutation of the classes composed with
// copy swaps on selected classes.
class IotaPermutation {
 public:
  IotaPermutation(Permutation class_perm, std::vector<bool> swap_copies);
  static IotaPermutation identity(int e);
  static IotaPermutation random(int e, Rng& rng);

  int size() const { return perm_.size(); }
  OrientedElement apply(OrientedElement x) const {
    return {perm_(x.cls), x.neg != swaps_[static_cast<std::size_t>(x.cls)]};
  }
  IotaPermutation inverse() const;
  const Permutation& class_permutation() const { return perm_; }

 private:
  Permutation perm_;
  std::vector<bool> swaps_;
};

class OrientedTwoPartition {
 public:
  // parity +1: even (iota-invariant) partition; parity -1: semi-orientation.
  // section_alpha gives the labeling on the positive copies; canonicalized
  // so class 0's positive copy carries +1.
  OrientedTwoPartition(OrientableSet base, Sign parity,
                       std::vector<Sign> section_alpha);
  static OrientedTwoPartition trivial(OrientableSet base);

  const OrientableSet& base() const { return base_; }
  int classes() const { return base_.classes(); }
  Sign parity() const { return parity_; }
  Sign alpha(OrientedElement x) const {
    Sign s = section_[static_cast<std::size_t>(x.cls)];
    return x.neg ? parity_ * s : s;
  }
  const std::vector<Sign>& section_labeling() const { return section_; }

  bool in_same_class(OrientedElement a, OrientedElement b) const {
    return alpha(a) == alpha(b);
  }
  bool is_trivial() const;

  // Even partitions descend to the quotient.
  TwoPartition quotient_partition() const;  // InputError when odd

  OrientedTwoPartition permuted(const IotaPermutation& g) const;

  friend OrientedTwoPartition operator*(const OrientedTwoPartition& a,
                                        const OrientedTwoPartition& b);
  friend bool operator==(const OrientedTwoPartition& a,
                         const OrientedTwoPartition& b) {
    return a.base_ == b.base_ && a.parity_ == b.parity_ &&
           a.section_ == b.section_;
  }

 private:
  OrientableSet base_;
  Sign parity_;
  std::vector<Sign> section_;
};

// The two complementary sections of a semi-orientation (alpha = +1 side
// first).  InputError on even input.
std::pair<std::vector<OrientedElement>, std::vector<OrientedElement>>
semi_orientation_sections(const OrientedTwoPartition& p);

class OrientedSignFunction {
 public:
  // table holds values on increasing class tuples lifted to positive
  // copies; parity governs copy swaps, signature governs reordering.
  // Signature is canonicalized to +1 at l == 1.
  OrientedSignFunction(OrientableSet base, int arity, Sign signature,
                       Sign parity, std::vector<Sign> table);
  static OrientedSignFunction constant_even(OrientableSet base, int arity,
                                            Sign value);
  // Even symmetric flip on a class subset (arity = |subset|).
  static OrientedSignFunction even_flip(OrientableSet base,
                                        std::span<const int> class_subset);
  static OrientedSignFunction random(OrientableSet base, int arity,
                                     Sign signature, Sign parity,
                                     std::uint64_t seed);
  // The canonical bijection between functions on the quotient and even
  // functions upstairs.
  static OrientedSignFunction even_from_quotient(const SignFunction& phi,
                                                 OrientableSet base);
  SignFunction quotient_function() const;  // InputError when odd

  const OrientableSet& base() const { return base_; }
  int arity() const { return arity_; }
  Sign signature() const { return signature_; }
  Sign parity() const { return parity_; }
  const std::vector<Sign>& table() const { return table_; }

  // Value on a tuple of elements with pairwise distinct classes.
  Sign eval(std::span<const OrientedElement> tuple) const;

  OrientedSignFunction permuted(const IotaPermutation& g) const;

  friend OrientedSignFunction operator*(const OrientedSignFunction& a,
                                        const OrientedSignFunction& b);
  friend bool operator==(const OrientedSignFunction& a,
                         const OrientedSignFunction& b) {
    return a.base_ == b.base_ && a.arity_ == b.arity_ &&
           a.signature_ == b.signature_ && a.parity_ == b.parity_ &&
           a.table_ == b.table_;
  }

 private:
  OrientableSet base_;
  int arity_;
  Sign signature_;
  Sign parity_;
  std::vector<Sign> table_;
};

class OrientedPairwiseSign {
 public:
  // section_table holds sigma on pairs of positive copies (colex pair
  // rank); parity extends it to all copies.  Checked: triple products on
  // the section must be constant (gamma; +1 when e <= 2).
  OrientedPairwiseSign(OrientableSet base, Sign parity,
                       std::vector<Sign> section_table);
  static OrientedPairwiseSign with_known_gamma(OrientableSet base, Sign parity,
                                               std::vector<Sign> section_table,
                                               Sign gamma);

  const OrientableSet& base() const { return base_; }
  int classes() const { return base_.classes(); }
  Sign parity() const { return parity_; }
  Sign gamma() const { return gamma_; }
  Sign sigma(OrientedElement a, OrientedElement b) const;
  const std::vector<Sign>& section_table() const { return table_; }

 private:
  OrientableSet base_;
  Sign parity_;
  std::vector<Sign> table_;
  Sign gamma_;
};

// Pair sign of phi at two elements in distinct classes: double product
// over (l-1)-tuples drawn from a section of the remaining classes.  The
// choice of section does not matter; the default uses positive copies.
Sign ori_sigma_phi(const OrientedSignFunction& phi, OrientedElement y,
                   OrientedElement z);
// Same, with an explicit section (neg flag per class) for the remaining
// classes -- exists to let tests exercise section independence.
Sign ori_sigma_phi_with_section(const OrientedSignFunction& phi,
                                OrientedElement y, OrientedElement z,
                                const std::vector<bool>& section_neg);

// All pair signs, with parity = parity(phi)^C(e-2, l-1) and gamma =
// signature(phi)^C(e-3, l-2).
OrientedPairwiseSign ori_sigma_table(const OrientedSignFunction& phi);

// Partition recovery from a base element x0: alpha(x0) = +1,
// alpha(iota x0) = parity, alpha(y) = gamma * sigma(x0, y).  Independent
// of the choice of x0.
OrientedTwoPartition ori_partition_from_pairwise(
    const OrientedPairwiseSign& s, OrientedElement base = OrientedElement{});

// The oriented morphism.
OrientedTwoPartition ori_rho(const OrientedSignFunction& phi);

}  // namespace orchard
