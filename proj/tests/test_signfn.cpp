// Sign functions on injective tuples: tables, evaluation, group structure.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "orchard/signfn.hpp"
#include "test_support.hpp"

using namespace orchard;

namespace {

// Independent inversion-parity reference used to cross-check eval().
Sign parity_by_inversions(std::span<const int> tuple) {
  int inversions = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    for (std::size_t j = i + 1; j < tuple.size(); ++j) {
      if (tuple[i] > tuple[j]) ++inversions;
    }
  }
  return (inversions % 2 == 0) ? +1 : -1;
}

void colex_table_order() {
  // Arity-2 tables on 4 points are indexed (0,1),(0,2),(1,2),(0,3),(1,3),(2,3).
  std::vector<std::vector<int>> visited;
  for_each_subset(4, 2, [&](std::span<const int> t) {
    visited.emplace_back(t.begin(), t.end());
  });
  const std::vector<std::vector<int>> expect{
      {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
  CHECK(visited == expect);
  for (std::size_t r = 0; r < expect.size(); ++r) {
    CHECK(subset_rank(expect[r]) == r);
    CHECK(subset_unrank(r, 4, 2) == expect[r]);
  }

  // A table entry lands on its colex slot.
  const GroundSet g = GroundSet::indexed(4);
  std::vector<Sign> table(6, +1);
  table[2] = -1;  // tuple (1,2)
  const SignFunction phi(g, 2, +1, table);
  CHECK(phi.at_sorted(std::array<int, 2>{1, 2}) == -1);
  CHECK(phi.at_sorted(std::array<int, 2>{0, 1}) == +1);
}

void construction_and_validation() {
  const GroundSet g = GroundSet::indexed(4);
  CHECK_THROWS_AS((void)SignFunction(g, 2, +1, std::vector<Sign>(5, +1)),
                  InputError);
  CHECK_THROWS_AS((void)SignFunction(g, 0, +1, {}), InputError);
  CHECK_THROWS_AS((void)SignFunction(g, 5, +1, {}), InputError);
  CHECK_THROWS_AS((void)SignFunction(g, 2, 0, std::vector<Sign>(6, +1)),
                  InputError);
  std::vector<Sign> off(6, +1);
  off[1] = 2;
  CHECK_THROWS_AS((void)SignFunction(g, 2, +1, off), InputError);

  // Arity 1: antisymmetric input is stored with signature +1.
  const SignFunction unary(g, 1, -1, {+1, -1, +1, -1});
  CHECK(unary.signature() == +1);
  CHECK(unary == SignFunction(g, 1, +1, {+1, -1, +1, -1}));
}

void evaluation() {
  const GroundSet g = GroundSet::indexed(4);
  std::vector<Sign> table(6, +1);
  table[subset_rank(std::array<int, 2>{0, 2})] = -1;

  const SignFunction sym(g, 2, +1, table);
  CHECK(sym.eval(std::array<int, 2>{0, 2}) == -1);
  CHECK(sym.eval(std::array<int, 2>{2, 0}) == -1);  // symmetric
  CHECK(sym.eval(std::array<int, 2>{1, 0}) == +1);

  const SignFunction anti(g, 2, -1, table);
  CHECK(anti.eval(std::array<int, 2>{0, 2}) == -1);
  CHECK(anti.eval(std::array<int, 2>{2, 0}) == +1);  // one transposition
  CHECK(anti.eval(std::array<int, 2>{1, 0}) == -1);

  // (2,0,1) is an even rearrangement of (0,1,2).
  const SignFunction anti3 = SignFunction::constant(g, 3, +1);
  const SignFunction anti3n(g, 3, -1, anti3.table());
  CHECK(anti3n.eval(std::array<int, 3>{2, 0, 1}) ==
        anti3n.eval(std::array<int, 3>{0, 1, 2}));
  CHECK(anti3n.eval(std::array<int, 3>{1, 0, 2}) ==
        -anti3n.eval(std::array<int, 3>{0, 1, 2}));

  CHECK_THROWS_AS((void)sym.eval(std::array<int, 2>{1, 1}), InputError);
  CHECK_THROWS_AS((void)sym.eval(std::array<int, 2>{0, 4}), InputError);
  CHECK_THROWS_AS((void)sym.eval(std::array<int, 3>{0, 1, 2}), InputError);

  // Randomized cross-check of eval against an independent inversion count.
  Rng rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const int l = 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n - 1)));
    const Sign sig = rng.sign();
    const SignFunction phi = SignFunction::random(
        GroundSet::indexed(n), l, sig, 1000 + static_cast<std::uint64_t>(trial));
    std::vector<int> tuple(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) tuple[static_cast<std::size_t>(i)] = i;
    rng.shuffle(tuple);
    tuple.resize(static_cast<std::size_t>(l));
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const Sign expect =
        phi.at_sorted(sorted) *
        (phi.signature() == -1 ? parity_by_inversions(tuple) : +1);
    CHECK(phi.eval(tuple) == expect);
  }
}

void constants_and_flips() {
  const GroundSet g = GroundSet::indexed(5);
  const SignFunction one = SignFunction::constant(g, 2, +1);
  CHECK(std::all_of(one.table().begin(), one.table().end(),
                    [](Sign s) { return s == +1; }));

  const std::array<int, 2> x{1, 3};
  const SignFunction f = SignFunction::flip(g, x);
  CHECK(f.signature() == +1);
  int minus = 0;
  for (Sign s : f.table()) minus += (s == -1);
  CHECK(minus == 1);
  CHECK(f.eval(x) == -1);
  CHECK(f.eval(std::array<int, 2>{3, 1}) == -1);
  CHECK(f.eval(std::array<int, 2>{0, 3}) == +1);

  CHECK_THROWS_AS((void)SignFunction::flip(g, std::array<int, 2>{1, 1}),
                  InputError);
  CHECK_THROWS_AS((void)SignFunction::flip(g, std::span<const int>{}),
                  InputError);

  // flip_decomposition reproduces the function as a product of flips.
  const SignFunction phi = SignFunction::random(g, 2, +1, 7);
  SignFunction prod = SignFunction::constant(g, 2, +1);
  for (const auto& fs : phi.flip_decomposition()) {
    prod = prod * SignFunction::flip(g, fs);
  }
  CHECK(prod == phi);
  CHECK_THROWS_AS((void)SignFunction(g, 2, -1, phi.table()).flip_decomposition(),
                  InputError);
}

void randomness() {
  const GroundSet g = GroundSet::indexed(6);
  // Same seed: identical tables; across seeds the tables should differ
  // essentially always (probability 2^-15 per pair of colliding).
  int differing = 0;
  for (std::uint64_t s = 0; s < 50; ++s) {
    const SignFunction a = SignFunction::random(g, 2, +1, s);
    const SignFunction b = SignFunction::random(g, 2, +1, s);
    CHECK(a == b);
    const SignFunction c = SignFunction::random(g, 2, +1, s + 1000);
    differing += (a == c) ? 0 : 1;
  }
  CHECK_MSG(differing >= 45, "random tables collide across seeds");

  const SignFunction anti = SignFunction::random(g, 3, -1, 11);
  CHECK(anti.signature() == -1);
}

void group_structure() {
  const GroundSet g = GroundSet::indexed(4);
  const SignFunction a = SignFunction::random(g, 2, +1, 1);
  const SignFunction b = SignFunction::random(g, 2, +1, 2);
  const SignFunction c = SignFunction::random(g, 2, -1, 3);
  const SignFunction d = SignFunction::random(g, 2, -1, 4);

  // Pointwise product, signature multiplies.
  const SignFunction ab = a * b;
  CHECK(ab.signature() == +1);
  const SignFunction ac = a * c;
  CHECK(ac.signature() == -1);
  CHECK((c * d).signature() == +1);
  for (std::size_t r = 0; r < ab.table().size(); ++r) {
    CHECK(ab.table()[r] == a.table()[r] * b.table()[r]);
    CHECK(ac.table()[r] == a.table()[r] * c.table()[r]);
  }
  // Pointwise on unsorted tuples too.
  CHECK(ac.eval(std::array<int, 2>{3, 0}) ==
        a.eval(std::array<int, 2>{3, 0}) * c.eval(std::array<int, 2>{3, 0}));

  CHECK(a * a == SignFunction::constant(g, 2, +1));
  CHECK(a * b == b * a);
  CHECK((a * b) * c == a * (b * c));

  CHECK_THROWS_AS(
      (void)(a * SignFunction::constant(g, 3, +1)), InputError);
  CHECK_THROWS_AS(
      (void)(a * SignFunction::constant(GroundSet::indexed(5), 2, +1)),
      InputError);

  // Counts: 2^C(n,l) symmetric plus 2^C(n,l) antisymmetric for l > 1,
  // collapsing to one copy at l == 1.
  for (int n = 2; n <= 4; ++n) {
    for (int l = 1; l <= n; ++l) {
      const std::uint64_t cells = binomial(n, l);
      const std::uint64_t expect = (l == 1 ? 1ull : 2ull) << cells;
      std::set<std::pair<Sign, std::vector<Sign>>> seen;
      const GroundSet gn = GroundSet::indexed(n);
      for (Sign sig : {+1, -1}) {
        for (std::uint64_t bits = 0; bits < (1ull << cells); ++bits) {
          std::vector<Sign> table(cells);
          for (std::uint64_t i = 0; i < cells; ++i) {
            table[i] = (bits & (1ull << i)) ? -1 : +1;
          }
          const SignFunction phi(gn, l, sig, table);
          seen.insert({phi.signature(), phi.table()});
        }
      }
      CHECK(seen.size() == expect);
    }
  }
}

void antisymmetric_half_is_free() {
  // For l > 1 the antisymmetric functions form a single free orbit under
  // multiplication by the symmetric group half: psi -> phi0 * psi is a
  // bijection from symmetric to antisymmetric tables.
  const GroundSet g = GroundSet::indexed(3);
  const SignFunction phi0(g, 2, -1, std::vector<Sign>(3, +1));
  std::set<std::vector<Sign>> images;
  for (std::uint64_t bits = 0; bits < 8; ++bits) {
    std::vector<Sign> table(3);
    for (int i = 0; i < 3; ++i) table[static_cast<std::size_t>(i)] =
        (bits & (1ull << i)) ? -1 : +1;
    const SignFunction psi(g, 2, +1, table);
    const SignFunction image = phi0 * psi;
    CHECK(image.signature() == -1);
    images.insert(image.table());
  }
  CHECK(images.size() == 8);  // all 2^C(3,2) antisymmetric functions reached
}

void permutation_law() {
  Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + static_cast<int>(rng.below(4));
    const int l = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
    const GroundSet g = GroundSet::indexed(n);
    const SignFunction phi = SignFunction::random(
        g, l, rng.sign(), 500 + static_cast<std::uint64_t>(trial));
    const Permutation p = random_permutation(n, rng);
    const SignFunction moved = phi.permuted(p);
    CHECK(moved.signature() == phi.signature());

    // (pi . phi)(pi(t)) == phi(t) on every increasing tuple.
    bool ok = true;
    for_each_subset(n, l, [&](std::span<const int> t) {
      std::vector<int> image(t.size());
      for (std::size_t i = 0; i < t.size(); ++i) image[i] = p(t[i]);
      if (moved.eval(image) != phi.at_sorted(t)) ok = false;
    });
    CHECK_MSG(ok, "permuted() disagrees with pointwise relabeling");

    // Identity and composition (left action: q relabels first, p second).
    CHECK(phi.permuted(Permutation::identity(n)) == phi);
    const Permutation q = random_permutation(n, rng);
    CHECK(phi.permuted(p * q) == phi.permuted(q).permuted(p));
    CHECK(phi.permuted(p).permuted(p.inverse()) == phi);
  }

  // pi . flip(X) == flip(pi(X)).
  const GroundSet g = GroundSet::indexed(5);
  const Permutation p(std::vector<int>{4, 2, 0, 1, 3});
  const std::array<int, 3> x{0, 3, 4};
  std::vector<int> px;
  for (int v : x) px.push_back(p(v));
  std::sort(px.begin(), px.end());
  CHECK(SignFunction::flip(g, x).permuted(p) == SignFunction::flip(g, px));
}

}  // namespace

int main() {
  colex_table_order();
  construction_and_validation();
  evaluation();
  constants_and_flips();
  randomness();
  group_structure();
  antisymmetric_half_is_free();
  permutation_law();
  return testsupport::finish("test_signfn");
}
