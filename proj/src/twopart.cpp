#include "orchard/twopart.hpp"

#include <algorithm>

namespace orchard {

namespace {

void require_signs(const std::vector<Sign>& v, const char* what) {
  for (Sign s : v) {
    if (s != +1 && s != -1) {
      throw InputError(std::string(what) + ": entries must be +1 or -1");
    }
  }
}

std::string triple_text(const GroundSet& g, int i, int j, int k) {
  return "{" + g.label(i) + ", " + g.label(j) + ", " + g.label(k) + "}";
}

}  // namespace

TwoPartition::TwoPartition(GroundSet ground, std::vector<Sign> alpha)
    : ground_(std::move(ground)), alpha_(std::move(alpha)) {
  if (static_cast<int>(alpha_.size()) != ground_.size()) {
    throw InputError("two-partition: labeling size mismatch");
  }
  require_signs(alpha_, "two-partition");
  if (!alpha_.empty() && alpha_[0] == -1) {
    for (Sign& s : alpha_) s = -s;
  }
}

TwoPartition TwoPartition::trivial(GroundSet ground) {
  std::vector<Sign> alpha(static_cast<std::size_t>(ground.size()), +1);
  return TwoPartition(std::move(ground), std::move(alpha));
}

TwoPartition TwoPartition::from_label_signs(
    GroundSet ground, const std::unordered_map<std::string, Sign>& signs) {
  if (static_cast<int>(signs.size()) != ground.size()) {
    throw InputError("two-partition: wrong number of labeled signs");
  }
  std::vector<Sign> alpha(static_cast<std::size_t>(ground.size()));
  for (const auto& [label, sign] : signs) {
    alpha[static_cast<std::size_t>(ground.index_of(label))] = sign;
  }
  return TwoPartition(std::move(ground), std::move(alpha));
}

bool TwoPartition::is_trivial() const {
  return std::all_of(alpha_.begin(), alpha_.end(),
                     [](Sign s) { return s == +1; });
}

std::pair<std::vector<int>, std::vector<int>> TwoPartition::classes() const {
  std::pair<std::vector<int>, std::vector<int>> out;
  for (int i = 0; i < size(); ++i) {
    (alpha(i) == +1 ? out.first : out.second).push_back(i);
  }
  return out;
}

TwoPartition TwoPartition::permuted(const Permutation& p) const {
  if (p.size() != size()) throw InputError("two-partition: permutation size");
  const Permutation inv = p.inverse();
  std::vector<Sign> alpha(alpha_.size());
  for (int i = 0; i < size(); ++i) {
    alpha[static_cast<std::size_t>(i)] = this->alpha(inv(i));
  }
  return TwoPartition(ground_, std::move(alpha));
}

TwoPartition operator*(const TwoPartition& a, const TwoPartition& b) {
  if (!(a.ground_ == b.ground_)) {
    throw InputError("two-partition: ground set mismatch");
  }
  std::vector<Sign> alpha(a.alpha_.size());
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    alpha[i] = a.alpha_[i] * b.alpha_[i];
  }
  return TwoPartition(a.ground_, std::move(alpha));
}

std::vector<std::pair<int, int>> relation_difference(const TwoPartition& a,
                                                     const TwoPartition& b) {
  if (!(a.ground() == b.ground())) {
    throw InputError("relation_difference: ground set mismatch");
  }
  std::vector<std::pair<int, int>> out;
  const int n = a.size();
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (a.in_same_class(i, j) != b.in_same_class(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::size_t PairwiseSign::pair_rank(int i, int j) {
  const int lo = std::min(i, j);
  const int hi = std::max(i, j);
  return binomial(hi, 2) + static_cast<std::size_t>(lo);
}

PairwiseSign::PairwiseSign(GroundSet ground, std::vector<Sign> table, Sign gamma,
                           int)
    : ground_(std::move(ground)), table_(std::move(table)), gamma_(gamma) {
  const int n = ground_.size();
  if (table_.size() != binomial(n, 2)) {
    throw InputError("pairwise signs: table size mismatch");
  }
  require_signs(table_, "pairwise signs");
  if (gamma_ != +1 && gamma_ != -1) {
    throw InputError("pairwise signs: gamma must be +1 or -1");
  }
}

PairwiseSign::PairwiseSign(GroundSet ground, std::vector<Sign> table)
    : PairwiseSign(std::move(ground), std::move(table), +1, 0) {
  const int n = ground_.size();
  if (n >= 3) {
    gamma_ = sigma(0, 1) * sigma(0, 2) * sigma(1, 2);
    for (int k = 2; k < n; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          if (sigma(i, j) * sigma(i, k) * sigma(j, k) != gamma_) {
            throw TripleConstantError(
                "pairwise signs: triple products are not constant; "
                "offending triple " +
                    triple_text(ground_, i, j, k),
                {i, j, k});
          }
        }
      }
    }
  }
}

PairwiseSign PairwiseSign::with_known_gamma(GroundSet ground,
                                            std::vector<Sign> table,
                                            Sign gamma) {
  return PairwiseSign(std::move(ground), std::move(table), gamma, 0);
}

PairwiseSign PairwiseSign::from_function(
    GroundSet ground, const std::function<Sign(int, int)>& sigma) {
  const int n = ground.size();
  std::vector<Sign> table(binomial(n, 2));
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      table[pair_rank(i, j)] = sigma(i, j);
    }
  }
  return PairwiseSign(std::move(ground), std::move(table));
}

Sign PairwiseSign::sigma(int i, int j) const {
  const int n = ground_.size();
  if (i == j || i < 0 || j < 0 || i >= n || j >= n) {
    throw InputError("pairwise signs: need two distinct elements");
  }
  return table_[pair_rank(i, j)];
}

PairwiseSign PairwiseSign::permuted(const Permutation& p) const {
  const int n = ground_.size();
  if (p.size() != n) throw InputError("pairwise signs: permutation size");
  const Permutation inv = p.inverse();
  std::vector<Sign> table(table_.size());
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      table[pair_rank(i, j)] = sigma(inv(i), inv(j));
    }
  }
  // Triple products only get reindexed, so gamma survives relabeling.
  return PairwiseSign(ground_, std::move(table), gamma_, 0);
}

std::pair<TwoPartition, Sign> partition_from_pairwise(const PairwiseSign& s,
                                                      int base) {
  const int n = s.size();
  if (n < 1) throw InputError("partition_from_pairwise: empty ground set");
  if (base < 0 || base >= n) {
    throw InputError("partition_from_pairwise: base point out of range");
  }
  std::vector<Sign> alpha(static_cast<std::size_t>(n), +1);
  for (int x = 0; x < n; ++x) {
    if (x != base) {
      alpha[static_cast<std::size_t>(x)] = s.gamma() * s.sigma(x, base);
    }
  }
  return {TwoPartition(s.ground(), std::move(alpha)), s.gamma()};
}

std::pair<TwoPartition, Sign> complete_components(
    const GroundSet& ground, const std::vector<Sign>& table) {
  const int n = ground.size();
  if (n < 1) throw InputError("complete_components: empty ground set");
  if (table.size() != binomial(n, 2)) {
    throw InputError("complete_components: table size mismatch");
  }
  require_signs(table, "complete_components");

  auto sig = [&](int i, int j) { return table[PairwiseSign::pair_rank(i, j)]; };
  Sign gamma = +1;
  if (n >= 3) gamma = sig(0, 1) * sig(0, 2) * sig(1, 2);

  // Components of the agreement graph: edges where sigma matches gamma.
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[static_cast<std::size_t>(s)] != -1) continue;
    comp[static_cast<std::size_t>(s)] = ncomp;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (v != u && comp[static_cast<std::size_t>(v)] == -1 &&
            sig(u, v) == gamma) {
          comp[static_cast<std::size_t>(v)] = ncomp;
          stack.push_back(v);
        }
      }
    }
    ++ncomp;
  }

  // Valid tables have at most two components, each a clique of agreements.
  bool structure_ok = ncomp <= 2;
  if (structure_ok) {
    for (int j = 1; j < n && structure_ok; ++j) {
      for (int i = 0; i < j; ++i) {
        if (comp[static_cast<std::size_t>(i)] ==
                comp[static_cast<std::size_t>(j)] &&
            sig(i, j) != gamma) {
          structure_ok = false;
          break;
        }
      }
    }
  }
  if (!structure_ok) {
    for (int k = 2; k < n; ++k) {
      for (int j = 1; j < k; ++j) {
        for (int i = 0; i < j; ++i) {
          if (sig(i, j) * sig(i, k) * sig(j, k) != gamma) {
            throw TripleConstantError(
                "complete_components: triple products are not constant; "
                "offending triple " +
                    triple_text(ground, i, j, k),
                {i, j, k});
          }
        }
      }
    }
    throw std::logic_error("complete_components: inconsistent structure");
  }

  std::vector<Sign> alpha(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    alpha[static_cast<std::size_t>(i)] =
        (comp[static_cast<std::size_t>(i)] == comp[0]) ? +1 : -1;
  }
  return {TwoPartition(ground, std::move(alpha)), gamma};
}

}  // namespace orchard
