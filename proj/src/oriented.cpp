#include "orchard/oriented.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "orchard/morphism.hpp"

namespace orchard {

namespace {

void require_sign(Sign s, const char* what) {
  if (s != +1 && s != -1) {
    throw InputError(std::string(what) + ": sign must be +1 or -1");
  }
}

}  // namespace

OrientableSet::OrientableSet() = default;

OrientableSet::OrientableSet(
    GroundSet quotient, std::vector<std::pair<std::string, std::string>> ids)
    : quotient_(std::move(quotient)), ids_(std::move(ids)) {
  if (static_cast<int>(ids_.size()) != quotient_.size()) {
    throw InputError("orientable set: one id pair per class required");
  }
  std::unordered_set<std::string> seen;
  for (const auto& [pos, neg] : ids_) {
    if (pos.empty() || neg.empty()) {
      throw InputError("orientable set: empty element id");
    }
    if (!seen.insert(pos).second || !seen.insert(neg).second) {
      throw InputError("orientable set: duplicate element id");
    }
  }
}

OrientableSet OrientableSet::standard(int e) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> ids;
  labels.reserve(static_cast<std::size_t>(e));
  ids.reserve(static_cast<std::size_t>(e));
  for (int i = 0; i < e; ++i) {
    const std::string base = "L" + std::to_string(i);
    labels.push_back(base);
    ids.emplace_back(base + "+", base + "-");
  }
  return OrientableSet(GroundSet(std::move(labels)), std::move(ids));
}

const std::string& OrientableSet::id(OrientedElement x) const {
  if (x.cls < 0 || x.cls >= classes()) {
    throw InputError("orientable set: class index out of range");
  }
  const auto& pair = ids_[static_cast<std::size_t>(x.cls)];
  return x.neg ? pair.second : pair.first;
}

IotaPermutation::IotaPermutation(Permutation class_perm,
                                 std::vector<bool> swap_copies)
    : perm_(std::move(class_perm)), swaps_(std::move(swap_copies)) {
  if (static_cast<int>(swaps_.size()) != perm_.size()) {
    throw InputError("signed permutation: swap flags size mismatch");
  }
}

IotaPermutation IotaPermutation::identity(int e) {
  return IotaPermutation(Permutation::identity(e),
                         std::vector<bool>(static_cast<std::size_t>(e), false));
}

IotaPermutation IotaPermutation::random(int e, Rng& rng) {
  std::vector<bool> swaps(static_cast<std::size_t>(e));
  for (std::size_t i = 0; i < swaps.size(); ++i) swaps[i] = rng.chance();
  return IotaPermutation(random_permutation(e, rng), std::move(swaps));
}

IotaPermutation IotaPermutation::inverse() const {
  const Permutation pinv = perm_.inverse();
  std::vector<bool> swaps(swaps_.size());
  for (int c = 0; c < perm_.size(); ++c) {
    swaps[static_cast<std::size_t>(c)] =
        swaps_[static_cast<std::size_t>(pinv(c))];
  }
  return IotaPermutation(pinv, std::move(swaps));
}

OrientedTwoPartition::OrientedTwoPartition(OrientableSet base, Sign parity,
                                           std::vector<Sign> section_alpha)
    : base_(std::move(base)),
      parity_(parity),
      section_(std::move(section_alpha)) {
  require_sign(parity_, "oriented two-partition parity");
  if (static_cast<int>(section_.size()) != base_.classes()) {
    throw InputError("oriented two-partition: labeling size mismatch");
  }
  for (Sign s : section_) require_sign(s, "oriented two-partition");
  if (!section_.empty() && section_[0] == -1) {
    for (Sign& s : section_) s = -s;
  }
}

OrientedTwoPartition OrientedTwoPartition::trivial(OrientableSet base) {
  std::vector<Sign> sec(static_cast<std::size_t>(base.classes()), +1);
  return OrientedTwoPartition(std::move(base), +1, std::move(sec));
}

bool OrientedTwoPartition::is_trivial() const {
  return parity_ == +1 && std::all_of(section_.begin(), section_.end(),
                                      [](Sign s) { return s == +1; });
}

TwoPartition OrientedTwoPartition::quotient_partition() const {
  if (parity_ != +1) {
    throw InputError("quotient partition: even partitions only");
  }
  return TwoPartition(base_.quotient(), section_);
}

OrientedTwoPartition OrientedTwoPartition::permuted(
    const IotaPermutation& g) const {
  if (g.size() != classes()) {
    throw InputError("oriented two-partition: permutation size");
  }
  const IotaPermutation inv = g.inverse();
  std::vector<Sign> sec(section_.size());
  for (int c = 0; c < classes(); ++c) {
    sec[static_cast<std::size_t>(c)] = alpha(inv.apply({c, false}));
  }
  return OrientedTwoPartition(base_, parity_, std::move(sec));
}

OrientedTwoPartition operator*(const OrientedTwoPartition& a,
                               const OrientedTwoPartition& b) {
  if (!(a.base_ == b.base_)) {
    throw InputError("oriented two-partition: base mismatch");
  }
  std::vector<Sign> sec(a.section_.size());
  for (std::size_t i = 0; i < sec.size(); ++i) {
    sec[i] = a.section_[i] * b.section_[i];
  }
  return OrientedTwoPartition(a.base_, a.parity_ * b.parity_, std::move(sec));
}

std::pair<std::vector<OrientedElement>, std::vector<OrientedElement>>
semi_orientation_sections(const OrientedTwoPartition& p) {
  if (p.parity() != -1) {
    throw InputError("semi-orientation sections: odd partitions only");
  }
  std::pair<std::vector<OrientedElement>, std::vector<OrientedElement>> out;
  for (int c = 0; c < p.classes(); ++c) {
    const bool neg = p.section_labeling()[static_cast<std::size_t>(c)] == -1;
    out.first.push_back({c, neg});
    out.second.push_back({c, !neg});
  }
  return out;
}

OrientedSignFunction::OrientedSignFunction(OrientableSet base, int arity,
                                           Sign signature, Sign parity,
                                           std::vector<Sign> table)
    : base_(std::move(base)),
      arity_(arity),
      signature_(signature),
      parity_(parity),
      table_(std::move(table)) {
  const int e = base_.classes();
  if (arity_ < 1 || arity_ > e) {
    throw InputError("oriented sign function: arity out of range");
  }
  require_sign(signature_, "oriented sign function signature");
  require_sign(parity_, "oriented sign function parity");
  if (table_.size() != binomial(e, arity_)) {
    throw InputError("oriented sign function: table size mismatch");
  }
  for (Sign s : table_) require_sign(s, "oriented sign function");
  if (arity_ == 1) signature_ = +1;
}

OrientedSignFunction OrientedSignFunction::constant_even(OrientableSet base,
                                                         int arity,
                                                         Sign value) {
  std::vector<Sign> table(binomial(base.classes(), arity), value);
  return OrientedSignFunction(std::move(base), arity, +1, +1,
                              std::move(table));
}

OrientedSignFunction OrientedSignFunction::even_flip(
    OrientableSet base, std::span<const int> class_subset) {
  SignFunction f = SignFunction::flip(base.quotient(), class_subset);
  return even_from_quotient(f, std::move(base));
}

OrientedSignFunction OrientedSignFunction::random(OrientableSet base,
                                                  int arity, Sign signature,
                                                  Sign parity,
                                                  std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Sign> table(binomial(base.classes(), arity));
  for (Sign& s : table) s = rng.sign();
  return OrientedSignFunction(std::move(base), arity, signature, parity,
                              std::move(table));
}

OrientedSignFunction OrientedSignFunction::even_from_quotient(
    const SignFunction& phi, OrientableSet base) {
  if (!(phi.ground() == base.quotient())) {
    throw InputError("even lift: ground set must be the quotient");
  }
  return OrientedSignFunction(std::move(base), phi.arity(), phi.signature(),
                              +1, phi.table());
}

SignFunction OrientedSignFunction::quotient_function() const {
  if (parity_ != +1) {
    throw InputError("quotient function: even functions only");
  }
  return SignFunction(base_.quotient(), arity_, signature_, table_);
}

Sign OrientedSignFunction::eval(std::span<const OrientedElement> tuple) const {
  if (static_cast<int>(tuple.size()) != arity_) {
    throw InputError("oriented sign function: tuple arity mismatch");
  }
  const int e = base_.classes();
  std::vector<int> cls(tuple.size());
  int negs = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].cls < 0 || tuple[i].cls >= e) {
      throw InputError("oriented sign function: class out of range");
    }
    cls[i] = tuple[i].cls;
    if (tuple[i].neg) ++negs;
  }
  const Sign perm_sign = sort_tuple_tracking_sign(cls);
  Sign value = table_[subset_rank(cls)];
  if (signature_ == -1) value *= perm_sign;
  if (parity_ == -1 && negs % 2 == 1) value = -value;
  return value;
}

OrientedSignFunction OrientedSignFunction::permuted(
    const IotaPermutation& g) const {
  const int e = base_.classes();
  if (g.size() != e) {
    throw InputError("oriented sign function: permutation size");
  }
  const IotaPermutation inv = g.inverse();
  std::vector<Sign> table(table_.size());
  std::vector<OrientedElement> preimage(static_cast<std::size_t>(arity_));
  for_each_subset(e, arity_, [&](std::span<const int> t) {
    for (std::size_t i = 0; i < t.size(); ++i) {
      preimage[i] = inv.apply({t[i], false});
    }
    table[subset_rank(t)] = eval(preimage);
  });
  return OrientedSignFunction(base_, arity_, signature_, parity_,
                              std::move(table));
}

OrientedSignFunction operator*(const OrientedSignFunction& a,
                               const OrientedSignFunction& b) {
  if (!(a.base_ == b.base_) || a.arity_ != b.arity_) {
    throw InputError("oriented sign function product: incompatible operands");
  }
  std::vector<Sign> table(a.table_.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    table[i] = a.table_[i] * b.table_[i];
  }
  return OrientedSignFunction(a.base_, a.arity_, a.signature_ * b.signature_,
                              a.parity_ * b.parity_, std::move(table));
}

OrientedPairwiseSign::OrientedPairwiseSign(OrientableSet base, Sign parity,
                                           std::vector<Sign> section_table)
    : base_(std::move(base)),
      parity_(parity),
      table_(std::move(section_table)),
      gamma_(+1) {
  require_sign(parity_, "oriented pairwise signs parity");
  const int e = base_.classes();
  if (table_.size() != binomial(e, 2)) {
    throw InputError("oriented pairwise signs: table size mismatch");
  }
  for (Sign s : table_) require_sign(s, "oriented pairwise signs");
  if (e >= 3) {
    auto sig = [&](int i, int j) {
      return table_[PairwiseSign::pair_rank(i, j)];
    };
    gamma_ = sig(0, 1) * sig(0, 2) * sig(1, 2);
    for (int k = 2; k < e; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          if (sig(i, j) * sig(i, k) * sig(j, k) != gamma_) {
            throw TripleConstantError(
                "oriented pairwise signs: triple products are not constant",
                {i, j, k});
          }
        }
      }
    }
  }
}

OrientedPairwiseSign OrientedPairwiseSign::with_known_gamma(
    OrientableSet base, Sign parity, std::vector<Sign> section_table,
    Sign gamma) {
  OrientedPairwiseSign out(std::move(base), parity, std::move(section_table));
  out.gamma_ = gamma;
  return out;
}

Sign OrientedPairwiseSign::sigma(OrientedElement a, OrientedElement b) const {
  const int e = base_.classes();
  if (a.cls == b.cls || a.cls < 0 || b.cls < 0 || a.cls >= e || b.cls >= e) {
    throw InputError("oriented pairwise signs: need distinct classes");
  }
  Sign s = table_[PairwiseSign::pair_rank(a.cls, b.cls)];
  const int negs = (a.neg ? 1 : 0) + (b.neg ? 1 : 0);
  if (parity_ == -1 && negs % 2 == 1) s = -s;
  return s;
}

Sign ori_sigma_phi_with_section(const OrientedSignFunction& phi,
                                OrientedElement y, OrientedElement z,
                                const std::vector<bool>& section_neg) {
  const int e = phi.base().classes();
  const int l = phi.arity();
  if (y.cls == z.cls || y.cls < 0 || z.cls < 0 || y.cls >= e || z.cls >= e) {
    throw InputError("oriented sigma: need elements in distinct classes");
  }
  if (static_cast<int>(section_neg.size()) != e) {
    throw InputError("oriented sigma: section size mismatch");
  }
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(e - 2));
  for (int c = 0; c < e; ++c) {
    if (c != y.cls && c != z.cls) rest.push_back(c);
  }
  std::vector<OrientedElement> ty(static_cast<std::size_t>(l));
  std::vector<OrientedElement> tz(static_cast<std::size_t>(l));
  Sign acc = +1;
  for_each_subset(e - 2, l - 1, [&](std::span<const int> s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
      const int c = rest[static_cast<std::size_t>(s[i])];
      ty[i] = {c, section_neg[static_cast<std::size_t>(c)]};
      tz[i] = ty[i];
    }
    ty[static_cast<std::size_t>(l - 1)] = y;
    tz[static_cast<std::size_t>(l - 1)] = z;
    acc *= phi.eval(ty) * phi.eval(tz);
  });
  if (testing::sigma_sign_error.load(std::memory_order_relaxed)) acc = -acc;
  return acc;
}

Sign ori_sigma_phi(const OrientedSignFunction& phi, OrientedElement y,
                   OrientedElement z) {
  return ori_sigma_phi_with_section(
      phi, y, z,
      std::vector<bool>(static_cast<std::size_t>(phi.base().classes()),
                        false));
}

OrientedPairwiseSign ori_sigma_table(const OrientedSignFunction& phi) {
  const int e = phi.base().classes();
  const int l = phi.arity();
  std::vector<Sign> table(binomial(e, 2));
  for (int j = 1; j < e; ++j) {
    for (int i = 0; i < j; ++i) {
      table[PairwiseSign::pair_rank(i, j)] =
          ori_sigma_phi(phi, {i, false}, {j, false});
    }
  }
  const Sign parity =
      (phi.parity() == -1 && binomial_odd(e - 2, l - 1)) ? -1 : +1;
  const Sign gamma =
      (phi.signature() == -1 && binomial_odd(e - 3, l - 2)) ? -1 : +1;
#ifndef NDEBUG
  if (!testing::sigma_sign_error.load(std::memory_order_relaxed) && e >= 3) {
    auto sig = [&](int i, int j) {
      return table[PairwiseSign::pair_rank(i, j)];
    };
    for (int k = 2; k < e; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          assert(sig(i, j) * sig(i, k) * sig(j, k) == gamma &&
                 "oriented sigma triples must equal the pinned gamma");
        }
      }
    }
  }
#endif
  return OrientedPairwiseSign::with_known_gamma(phi.base(), parity,
                                                std::move(table), gamma);
}

OrientedTwoPartition ori_partition_from_pairwise(const OrientedPairwiseSign& s,
                                                 OrientedElement base) {
  const int e = s.classes();
  if (e < 1) throw InputError("oriented partition recovery: empty base set");
  if (base.cls < 0 || base.cls >= e) {
    throw InputError("oriented partition recovery: base out of range");
  }
  std::vector<Sign> sec(static_cast<std::size_t>(e), +1);
  // alpha(base) = +1 pins the base class's positive copy to either +1 or
  // parity depending on which copy the base is.
  sec[static_cast<std::size_t>(base.cls)] = base.neg ? s.parity() : +1;
  for (int c = 0; c < e; ++c) {
    if (c != base.cls) {
      sec[static_cast<std::size_t>(c)] =
          s.gamma() * s.sigma(base, {c, false});
    }
  }
  return OrientedTwoPartition(s.base(), s.parity(), std::move(sec));
}

OrientedTwoPartition ori_rho(const OrientedSignFunction& phi) {
  return ori_partition_from_pairwise(ori_sigma_table(phi));
}

}  // namespace orchard
