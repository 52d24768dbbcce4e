#pragma once

// The Orchard morphism: the natural homomorphism rho from sign functions
// to two-partitions.
//
// For phi of arity l on E (n = |E|) and distinct y, z the pair sign is
//
//   sigma_phi(y, z) = prod over increasing (l-1)-tuples S of E \ {y,z}
//                     of phi(S,y) * phi(S,z).
//
// Its triple products are the constant gamma = signature(phi)^C(n-3, l-2),
// so sigma_phi is a PairwiseSign and induces a two-partition rho(phi).
// Both sigma and gamma are multiplicative in phi, hence rho is a group
// homomorphism, and everything commutes with relabeling E.
//
// For symmetric phi the one-point products
//
//   mu_phi(x) = prod over (l-1)-subsets S of E \ {x} of phi(S, x)
//
// satisfy mu(y)mu(z) = sigma(y,z); the partition by the sign of mu is a
// cheap independent oracle for rho.  mu~ (products over l-subsets avoiding
// x) differs from mu by the fixed factor c = prod over all l-subsets.

#include <atomic>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "orchard/signfn.hpp"
#include "orchard/twopart.hpp"

namespace orchard {

namespace testing {
// Fault-injection hook: when set, every computed pair sign is negated.
// Exists so the verification suites can demonstrate they catch a seeded
// sign error; never set outside tests / the hidden CLI flag.
extern std::atomic<bool> sigma_sign_error;
}  // namespace testing

// The defining double product for one pair (direct route).
Sign sigma_phi(const SignFunction& phi, int y, int z);

// One-point products mu_phi(x) for symmetric phi (InputError otherwise).
std::vector<Sign> mu_values(const SignFunction& phi);

// All pair signs of phi as a PairwiseSign with gamma pinned to
// signature^C(n-3, l-2).  The direct double product is authoritative; on
// symmetric input the mu shortcut is recomputed as a cross-check and any
// mismatch throws (disable for hot exhaustive loops that test mu
// separately).
PairwiseSign sigma_table(const SignFunction& phi, bool cross_check = true);

// The morphism itself: partition induced by sigma_table.
TwoPartition orchard_rho(const SignFunction& phi);

// Partition by the sign of mu (symmetric phi) -- the independent oracle
// for the symmetric half.
TwoPartition mu_partition(const SignFunction& phi);

// Verifies mu~ = c * mu pointwise and returns c = product of the whole
// table (symmetric phi).
Sign mu_tilde_factor(const SignFunction& phi);

struct FlipDelta {
  std::vector<int> flipset;
  // Pairs on which rho(phi) and rho(phi * f_X) disagree, i < j, colex.
  std::vector<std::pair<int, int>> changed_pairs;
  // Whether changed_pairs is exactly { (u,v) : |{u,v} ∩ X| == 1 }.
  bool matches_cross_pattern = false;
};

// Effect of multiplying phi by the flip f_X on the induced partition.
FlipDelta flip_delta(const SignFunction& phi, std::span<const int> flipset);

struct ExoticReport {
  TwoPartition pairwise_partition;  // partition induced by s directly
  TwoPartition rho_partition;       // rho of s viewed as a 2-symmetric function
  bool coincide = false;
  bool rho_trivial = false;
};

// Views a pairwise sign table as a 2-symmetric function and compares the
// two induced partitions.  Guarantees checked internally: odd n forces
// coincidence; even n forces rho trivial.  (n >= 3.)
ExoticReport exotic_check(const PairwiseSign& s);

}  // namespace orchard
