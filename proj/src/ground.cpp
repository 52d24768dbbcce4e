#include "orchard/ground.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace orchard {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (n > 62) throw InputError("binomial: argument too large for exact 64-bit");
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) /
        static_cast<std::uint64_t>(i);
  }
  return r;
}

bool binomial_odd(int n, int k) {
  if (k < 0 || n < 0 || k > n) return false;
  // Lucas mod 2: C(n,k) is odd iff k's bits are a submask of n's.
  return (static_cast<unsigned>(k) & static_cast<unsigned>(n - k)) == 0;
}

GroundSet::GroundSet() : p_(std::make_shared<Payload>()) {}

GroundSet::GroundSet(std::vector<std::string> labels) {
  auto payload = std::make_shared<Payload>();
  payload->labels = std::move(labels);
  for (std::size_t i = 0; i < payload->labels.size(); ++i) {
    const std::string& s = payload->labels[i];
    if (s.empty()) throw InputError("ground set: empty label");
    auto [it, fresh] = payload->index.emplace(s, static_cast<int>(i));
    if (!fresh) throw InputError("ground set: duplicate label '" + s + "'");
  }
  p_ = std::move(payload);
}

GroundSet GroundSet::indexed(int n, std::string_view prefix) {
  if (n < 0) throw InputError("ground set: negative size");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::string(prefix) + std::to_string(i));
  }
  return GroundSet(std::move(labels));
}

const std::string& GroundSet::label(int i) const {
  if (i < 0 || i >= size()) throw InputError("ground set: index out of range");
  return p_->labels[static_cast<std::size_t>(i)];
}

int GroundSet::index_of(const std::string& label) const {
  auto it = p_->index.find(label);
  if (it == p_->index.end()) {
    throw InputError("ground set: unknown label '" + label + "'");
  }
  return it->second;
}

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : img_) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
      throw InputError("permutation: images are not a bijection");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(img_.size());
  for (std::size_t i = 0; i < img_.size(); ++i) {
    inv[static_cast<std::size_t>(img_[i])] = static_cast<int>(i);
  }
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InputError("permutation: size mismatch");
  std::vector<int> img(a.img_.size());
  for (std::size_t i = 0; i < img.size(); ++i) {
    img[i] = a(b(static_cast<int>(i)));
  }
  return Permutation(std::move(img));
}

Permutation random_permutation(int n, Rng& rng) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  rng.shuffle(img);
  return Permutation(std::move(img));
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw InputError("rng: empty range");
  // Reject the final partial block of 2^64 so the result is unbiased.
  const std::uint64_t drop =
      (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
  for (;;) {
    const std::uint64_t r = word();
    if (drop == 0 || r < std::uint64_t{0} - drop) return r % n;
  }
}

std::int64_t Rng::range(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw InputError("rng: empty range");
  const std::uint64_t width =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  return lo + static_cast<std::int64_t>(below(width));
}

void for_each_subset(int n, int k,
                     const std::function<void(std::span<const int>)>& fn) {
  if (k < 0 || k > n) return;
  std::vector<int> t(static_cast<std::size_t>(k));
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    fn(std::span<const int>(t));
    // Colex successor: bump the leftmost entry with headroom, reset below.
    int i = 0;
    while (i < k) {
      const int cap = (i + 1 < k) ? t[static_cast<std::size_t>(i + 1)] : n;
      if (t[static_cast<std::size_t>(i)] + 1 < cap) break;
      ++i;
    }
    if (i == k) return;
    ++t[static_cast<std::size_t>(i)];
    for (int j = 0; j < i; ++j) t[static_cast<std::size_t>(j)] = j;
  }
}

std::size_t subset_rank(std::span<const int> sorted_tuple) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted_tuple.size(); ++i) {
    r += binomial(sorted_tuple[i], static_cast<int>(i) + 1);
  }
  return r;
}

std::vector<int> subset_unrank(std::size_t rank, int n, int k) {
  if (k < 0 || k > n || rank >= binomial(n, k)) {
    throw InputError("subset_unrank: rank out of range");
  }
  std::vector<int> out(static_cast<std::size_t>(k));
  std::size_t r = rank;
  int cap = n;
  for (int i = k; i >= 1; --i) {
    int a = cap - 1;
    while (a >= i - 1 && binomial(a, i) > r) --a;
    out[static_cast<std::size_t>(i - 1)] = a;
    r -= binomial(a, i);
    cap = a;
  }
  return out;
}

Sign sort_tuple_tracking_sign(std::span<int> tuple) {
  int inversions = 0;
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    int v = tuple[i];
    std::size_t j = i;
    while (j > 0 && tuple[j - 1] > v) {
      tuple[j] = tuple[j - 1];
      --j;
      ++inversions;
    }
    tuple[j] = v;
  }
  for (std::size_t i = 1; i < tuple.size(); ++i) {
    if (tuple[i] == tuple[i - 1]) {
      throw InputError("tuple has a repeated entry");
    }
  }
  return (inversions % 2 == 0) ? +1 : -1;
}

}  // namespace orchard
