#pragma once

// Symmetric / antisymmetric sign functions on injective l-tuples.
//
// A SignFunction phi of arity l stores one value per increasing l-tuple
// (colex table) plus a signature: +1 means fully symmetric, -1 fully
// antisymmetric (value picks up the permutation sign).  Evaluation on an
// arbitrary injective tuple sorts it and applies the signature to the
// inversion parity.  At l == 1 the two signatures describe the same
// functions, so the stored signature is canonicalized to +1.
//
// Under pointwise multiplication the functions of fixed arity form an
// abelian group F_± in which signatures multiply (symmetric * antisym =
// antisym); the "flips" f_X (value -1 exactly on the tuple enumerating X)
// generate the symmetric half.

#include <cstdint>
#include <span>
#include <vector>

#include "orchard/ground.hpp"

namespace orchard {

class SignFunction {
 public:
  SignFunction(GroundSet ground, int arity, Sign signature,
               std::vector<Sign> table);
  static SignFunction constant(GroundSet ground, int arity, Sign value);
  // Symmetric function that is -1 exactly on the increasing enumeration of
  // `flipset` (arity = |flipset|).
  static SignFunction flip(GroundSet ground, std::span<const int> flipset);
  static SignFunction random(GroundSet ground, int arity, Sign signature,
                             std::uint64_t seed);

  const GroundSet& ground() const { return ground_; }
  int arity() const { return arity_; }
  Sign signature() const { return signature_; }
  bool symmetric() const { return signature_ == +1; }
  const std::vector<Sign>& table() const { return table_; }

  // Value on a strictly increasing tuple (unchecked beyond size).
  Sign at_sorted(std::span<const int> tuple) const;
  // Value on an arbitrary injective tuple; InputError on repeats or
  // out-of-range entries.
  Sign eval(std::span<const int> tuple) const;

  SignFunction permuted(const Permutation& p) const;

  // Writes a symmetric phi as a product of flips: returns the flipsets of
  // all tuples valued -1 (f_X is -1 only at X, so the product reproduces
  // phi).  InputError on antisymmetric input.
  std::vector<std::vector<int>> flip_decomposition() const;

  friend SignFunction operator*(const SignFunction& a, const SignFunction& b);
  friend bool operator==(const SignFunction& a, const SignFunction& b) {
    return a.ground_ == b.ground_ && a.arity_ == b.arity_ &&
           a.signature_ == b.signature_ && a.table_ == b.table_;
  }

 private:
  GroundSet ground_;
  int arity_;
  Sign signature_;
  std::vector<Sign> table_;
};

}  // namespace orchard
