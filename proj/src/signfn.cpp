#include "orchard/signfn.hpp"

#include <algorithm>

namespace orchard {

SignFunction::SignFunction(GroundSet ground, int arity, Sign signature,
                           std::vector<Sign> table)
    : ground_(std::move(ground)),
      arity_(arity),
      signature_(signature),
      table_(std::move(table)) {
  const int n = ground_.size();
  if (arity_ < 1 || arity_ > n) {
    throw InputError("sign function: arity must be between 1 and |E|");
  }
  if (signature_ != +1 && signature_ != -1) {
    throw InputError("sign function: signature must be +1 or -1");
  }
  if (table_.size() != binomial(n, arity_)) {
    throw InputError("sign function: table size mismatch");
  }
  for (Sign s : table_) {
    if (s != +1 && s != -1) {
      throw InputError("sign function: table entries must be +1 or -1");
    }
  }
  // Unary functions are symmetric and antisymmetric at once; store one rep.
  if (arity_ == 1) signature_ = +1;
}

SignFunction SignFunction::constant(GroundSet ground, int arity, Sign value) {
  std::vector<Sign> table(binomial(ground.size(), arity), value);
  return SignFunction(std::move(ground), arity, +1, std::move(table));
}

SignFunction SignFunction::flip(GroundSet ground, std::span<const int> flipset) {
  std::vector<int> x(flipset.begin(), flipset.end());
  std::sort(x.begin(), x.end());
  const int n = ground.size();
  if (x.empty()) throw InputError("flip: empty flipset");
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] < 0 || x[i] >= n || (i > 0 && x[i] == x[i - 1])) {
      throw InputError("flip: flipset must be a set of ground elements");
    }
  }
  const int l = static_cast<int>(x.size());
  std::vector<Sign> table(binomial(n, l), +1);
  table[subset_rank(x)] = -1;
  return SignFunction(std::move(ground), l, +1, std::move(table));
}

SignFunction SignFunction::random(GroundSet ground, int arity, Sign signature,
                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sign> table(binomial(ground.size(), arity));
  for (Sign& s : table) s = rng.sign();
  return SignFunction(std::move(ground), arity, signature, std::move(table));
}

Sign SignFunction::at_sorted(std::span<const int> tuple) const {
  return table_[subset_rank(tuple)];
}

Sign SignFunction::eval(std::span<const int> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw InputError("sign function: tuple arity mismatch");
  }
  const int n = ground_.size();
  std::vector<int> t(tuple.begin(), tuple.end());
  for (int v : t) {
    if (v < 0 || v >= n) {
      throw InputError("sign function: tuple entry out of range");
    }
  }
  const Sign perm_sign = sort_tuple_tracking_sign(t);
  Sign value = table_[subset_rank(t)];
  if (signature_ == -1) value *= perm_sign;
  return value;
}

SignFunction SignFunction::permuted(const Permutation& p) const {
  const int n = ground_.size();
  if (p.size() != n) throw InputError("sign function: permutation size");
  const Permutation inv = p.inverse();
  std::vector<Sign> table(table_.size());
  std::vector<int> preimage(static_cast<std::size_t>(arity_));
  for_each_subset(n, arity_, [&](std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) preimage[i] = inv(t[i]);
    table[subset_rank(t)] = eval(preimage);
  });
  return SignFunction(ground_, arity_, signature_, std::move(table));
}

std::vector<std::vector<int>> SignFunction::flip_decomposition() const {
  if (signature_ != +1) {
    throw InputError("flip decomposition: symmetric functions only");
  }
  std::vector<std::vector<int>> out;
  for_each_subset(ground_.size(), arity_, [&](std::span<const int> t) {
    if (table_[subset_rank(t)] == -1) {
      out.emplace_back(t.begin(), t.end());
    }
  });
  return out;
}

SignFunction operator*(const SignFunction& a, const SignFunction& b) {
  if (!(a.ground_ == b.ground_) || a.arity_ != b.arity_) {
    throw InputError("sign function product: incompatible operands");
  }
  std::vector<Sign> table(a.table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = a.table_[i] * b.table_[i];
  }
  return SignFunction(a.ground_, a.arity_, a.signature_ * b.signature_,
                      std::move(table));
}

}  // namespace orchard
