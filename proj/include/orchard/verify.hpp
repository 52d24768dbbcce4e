#pragma once

// Property-based verification suites.
//
// Each check replays a law of the theory (group axioms, homomorphism and
// equivariance, triple-constant exponents, flip laws, the mu shortcut,
// geometric/oriented transfer) on exhaustive small cases plus seeded
// random instances, and reports pass/fail with a counterexample string.
// Everything is deterministic in the seed.

#include <cstdint>
#include <string>
#include <vector>

namespace orchard {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;  // counterexample or coverage stats
};

struct VerifyOptions {
  int n_max = 5;            // ground-set bound for randomized layers
  int e_max = 4;            // oriented class bound
  int configs_per_cell = 25;  // geometry: configurations per (d, n)
  std::uint64_t seed = 1;
};

std::vector<CheckResult> verify_core(const VerifyOptions& opt);
std::vector<CheckResult> verify_geometry(const VerifyOptions& opt);
std::vector<CheckResult> verify_oriented(const VerifyOptions& opt);

}  // namespace orchard
