#pragma once

// Finite ground sets, permutations, subset combinatorics, deterministic RNG.
//
// A GroundSet is an immutable ordered list of distinct labels; the stored
// order doubles as the total order every canonical form refers to.  Subset
// enumeration and ranks use colexicographic -- colex -- order throughout:
// the rank of an increasing tuple (a_0 < ... < a_{k-1}) is
//   sum_i C(a_i, i+1),
// so ranks are dense in [0, C(n,k)) and independent of n.

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "orchard/errors.hpp"

namespace orchard {

// Signs are plain ints restricted to {-1, +1}.
using Sign = int;

// C(n,k) with the extended convention: 0 whenever k < 0, n < 0 or k > n
// (so C(0,0) = 1 and C(n,k) = 0 for negative upper index).
std::uint64_t binomial(int n, int k);

// Parity of C(n,k) via Lucas: odd iff (k & (n-k)) == 0 (within range).
bool binomial_odd(int n, int k);

// (-1)^C(n,k).
inline Sign parity_sign(int n, int k) { return binomial_odd(n, k) ? -1 : +1; }

class GroundSet {
 public:
  GroundSet();  // empty
  explicit GroundSet(std::vector<std::string> labels);
  static GroundSet indexed(int n, std::string_view prefix = "P");

  int size() const { return static_cast<int>(p_->labels.size()); }
  const std::string& label(int i) const;
  const std::vector<std::string>& labels() const { return p_->labels; }
  int index_of(const std::string& label) const;  // InputError when absent

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.p_ == b.p_ || a.p_->labels == b.p_->labels;
  }

 private:
  struct Payload {
    std::vector<std::string> labels;
    std::unordered_map<std::string, int> index;
  };
  std::shared_ptr<const Payload> p_;
};

class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // InputError if not a bijection
  static Permutation identity(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i)]; }
  Permutation inverse() const;
  // Composition: (a * b)(x) = a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

 private:
  std::vector<int> img_;
};

// Deterministic RNG.  mt19937_64's output sequence is pinned by the
// standard; bounded draws use rejection sampling because the standard
// distributions are implementation-defined and would break byte-identical
// reruns across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t word() { return eng_(); }
  std::uint64_t below(std::uint64_t n);                  // uniform in [0, n)
  std::int64_t range(std::int64_t lo, std::int64_t hi);  // uniform in [lo, hi]
  Sign sign() { return (word() & 1u) ? +1 : -1; }
  bool chance() { return (word() & 1u) != 0; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[below(i)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

Permutation random_permutation(int n, Rng& rng);

// Visits every k-subset of {0..n-1} as an increasing tuple, in colex order
// (i.e. in order of subset_rank).  k > n or k < 0 visits nothing; k == 0
// visits the single empty tuple.
void for_each_subset(int n, int k,
                     const std::function<void(std::span<const int>)>& fn);

// Colex rank of a strictly increasing tuple.
std::size_t subset_rank(std::span<const int> sorted_tuple);

// Inverse of subset_rank for subsets of {0..n-1}.
std::vector<int> subset_unrank(std::size_t rank, int n, int k);

// Sorts `tuple` in place, returning the permutation sign (+1 even, -1 odd);
// throws InputError on repeated entries.
Sign sort_tuple_tracking_sign(std::span<int> tuple);

}  // namespace orchard
