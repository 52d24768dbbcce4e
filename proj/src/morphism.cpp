#include "orchard/morphism.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace orchard {

namespace testing {
std::atomic<bool> sigma_sign_error{false};
}  // namespace testing

namespace {

// Elements of E \ {y, z} in increasing order.
std::vector<int> others_of(int n, int y, int z) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n - 2));
  for (int x = 0; x < n; ++x) {
    if (x != y && x != z) out.push_back(x);
  }
  return out;
}

}  // namespace

Sign sigma_phi(const SignFunction& phi, int y, int z) {
  const int n = phi.ground().size();
  const int l = phi.arity();
  if (y == z || y < 0 || z < 0 || y >= n || z >= n) {
    throw InputError("sigma: need two distinct ground elements");
  }
  const std::vector<int> rest = others_of(n, y, z);
  std::vector<int> ty(static_cast<std::size_t>(l));
  std::vector<int> tz(static_cast<std::size_t>(l));
  Sign acc = +1;
  for_each_subset(n - 2, l - 1, [&](std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      ty[i] = rest[static_cast<std::size_t>(s[i])];
      tz[i] = ty[i];
    }
    ty[static_cast<std::size_t>(l - 1)] = y;
    tz[static_cast<std::size_t>(l - 1)] = z;
    acc *= phi.eval(ty) * phi.eval(tz);
  });
  if (testing::sigma_sign_error.load(std::memory_order_relaxed)) acc = -acc;
  return acc;
}

std::vector<Sign> mu_values(const SignFunction& phi) {
  if (!phi.symmetric()) {
    throw InputError("mu: symmetric functions only");
  }
  const int n = phi.ground().size();
  const int l = phi.arity();
  std::vector<Sign> mu(static_cast<std::size_t>(n), +1);
  std::vector<int> t(static_cast<std::size_t>(l));
  for (int x = 0; x < n; ++x) {
    std::vector<int> rest;
    rest.reserve(static_cast<std::size_t>(n - 1));
    for (int u = 0; u < n; ++u) {
      if (u != x) rest.push_back(u);
    }
    Sign acc = +1;
    for_each_subset(n - 1, l - 1, [&](std::span<const int> s) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        t[i] = rest[static_cast<std::size_t>(s[i])];
      }
      t[static_cast<std::size_t>(l - 1)] = x;
      acc *= phi.eval(t);
    });
    mu[static_cast<std::size_t>(x)] = acc;
  }
  return mu;
}

PairwiseSign sigma_table(const SignFunction& phi, bool cross_check) {
  const GroundSet& g = phi.ground();
  const int n = g.size();
  const int l = phi.arity();
  std::vector<Sign> table(binomial(n, 2));
  for (int z = 1; z < n; ++z) {
    for (int y = 0; y < z; ++y) {
      table[PairwiseSign::pair_rank(y, z)] = sigma_phi(phi, y, z);
    }
  }
  const Sign gamma =
      (phi.signature() == -1 && binomial_odd(n - 3, l - 2)) ? -1 : +1;

  if (cross_check && phi.symmetric() && n >= 2) {
    // mu(y)mu(z) must reproduce every pair sign (the double product's
    // cross terms square away for symmetric input).  Any mismatch means a
    // broken evaluation path, not bad input.
    const std::vector<Sign> mu = mu_values(phi);
    const Sign hook =
        testing::sigma_sign_error.load(std::memory_order_relaxed) ? -1 : +1;
    for (int z = 1; z < n; ++z) {
      for (int y = 0; y < z; ++y) {
        if (mu[static_cast<std::size_t>(y)] * mu[static_cast<std::size_t>(z)] *
                hook !=
            table[PairwiseSign::pair_rank(y, z)]) {
          throw std::logic_error(
              "sigma_table: direct product and mu shortcut disagree");
        }
      }
    }
  }

#ifndef NDEBUG
  if (!testing::sigma_sign_error.load(std::memory_order_relaxed) && n >= 3) {
    auto sig = [&](int i, int j) {
      return table[PairwiseSign::pair_rank(i, j)];
    };
    for (int k = 2; k < n; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          assert(sig(i, j) * sig(i, k) * sig(j, k) == gamma &&
                 "sigma triple products must equal the pinned gamma");
        }
      }
    }
  }
#endif
  return PairwiseSign::with_known_gamma(g, std::move(table), gamma);
}

TwoPartition orchard_rho(const SignFunction& phi) {
  return partition_from_pairwise(sigma_table(phi)).first;
}

TwoPartition mu_partition(const SignFunction& phi) {
  return TwoPartition(phi.ground(), mu_values(phi));
}

Sign mu_tilde_factor(const SignFunction& phi) {
  if (!phi.symmetric()) {
    throw InputError("mu~: symmetric functions only");
  }
  const int n = phi.ground().size();
  const int l = phi.arity();
  Sign c = +1;
  for (Sign s : phi.table()) c *= s;

  // mu~(x): product over l-subsets avoiding x; must equal c * mu(x).
  const std::vector<Sign> mu = mu_values(phi);
  for (int x = 0; x < n; ++x) {
    Sign acc = +1;
    for_each_subset(n, l, [&](std::span<const int> t) {
      if (std::find(t.begin(), t.end(), x) == t.end()) {
        acc *= phi.at_sorted(t);
      }
    });
    if (acc != c * mu[static_cast<std::size_t>(x)]) {
      throw std::logic_error("mu~: global-factor identity failed");
    }
  }
  return c;
}

FlipDelta flip_delta(const SignFunction& phi, std::span<const int> flipset) {
  const GroundSet& g = phi.ground();
  if (static_cast<int>(flipset.size()) != phi.arity()) {
    throw InputError("flip_delta: flipset size must equal the arity");
  }
  const SignFunction flipped = phi * SignFunction::flip(g, flipset);
  const TwoPartition before = orchard_rho(phi);
  const TwoPartition after = orchard_rho(flipped);

  FlipDelta out;
  out.flipset.assign(flipset.begin(), flipset.end());
  std::sort(out.flipset.begin(), out.flipset.end());
  out.changed_pairs = relation_difference(before, after);

  std::vector<bool> in_x(static_cast<std::size_t>(g.size()), false);
  for (int v : out.flipset) in_x[static_cast<std::size_t>(v)] = true;
  std::vector<std::pair<int, int>> expected;
  const int n = g.size();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (in_x[static_cast<std::size_t>(i)] !=
          in_x[static_cast<std::size_t>(j)]) {
        expected.emplace_back(i, j);
      }
    }
  }
  out.matches_cross_pattern = (out.changed_pairs == expected);
  return out;
}

ExoticReport exotic_check(const PairwiseSign& s) {
  const int n = s.size();
  if (n < 3) throw InputError("exotic_check: need at least three elements");

  // A pairwise table *is* a 2-symmetric function (same colex layout).
  const SignFunction phi(s.ground(), 2, +1, s.table());
  ExoticReport out{partition_from_pairwise(s).first, orchard_rho(phi), false,
                   false};
  out.coincide = (out.pairwise_partition == out.rho_partition);
  out.rho_trivial = out.rho_partition.is_trivial();

  if (n % 2 == 1 && !out.coincide) {
    throw std::logic_error("exotic_check: odd-size coincidence failed");
  }
  if (n % 2 == 0 && !out.rho_trivial) {
    throw std::logic_error("exotic_check: even-size triviality failed");
  }
  return out;
}

}  // namespace orchard
