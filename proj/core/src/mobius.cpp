// Moebius function of NC(n).
//
// [pi, sigma] factors over the blocks of sigma into intervals [rho, 1_k]. As a poset, [rho, 1_k]
// is unchanged by merging two cyclically adjacent elements of one block of rho, and by rotating
// or reflecting the circle. The memo is keyed by that canonical type; values come from the
// defining recursion
//   mu(rho, 1) = - sum_{rho <= tau < 1} mu(rho, tau),
// where every mu(rho, tau) again factors over the blocks of tau into strictly smaller intervals.

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

#include "bifree/error.hpp"
#include "bifree/partitions.hpp"

namespace bifree {

namespace {

constexpr std::size_t kMax = kPartitionHardCeiling;

struct Labels {
  int k = 0;
  std::array<std::uint8_t, kMax> v{};
};

// Relabels in order of first occurrence and packs into 64 bits. Element 1 always gets label 0,
// so the top nibble is free and carries k - 1.
std::uint64_t pack(const std::uint8_t* labels, int k) {
  std::array<int, kMax> rename;
  rename.fill(-1);
  int next = 0;
  std::uint64_t code = static_cast<std::uint64_t>(k - 1) << 60;
  for (int i = 0; i < k; ++i) {
    auto& r = rename[labels[i]];
    if (r < 0) r = next++;
    code |= static_cast<std::uint64_t>(r) << (4 * (kMax - 1 - static_cast<std::size_t>(i)));
  }
  return code;
}

Labels unpack(std::uint64_t code) {
  Labels out;
  out.k = static_cast<int>(code >> 60) + 1;
  for (int i = 1; i < out.k; ++i)
    out.v[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>((code >> (4 * (kMax - 1 - static_cast<std::size_t>(i)))) & 0xFu);
  return out;
}

void collapse(Labels& p) {
  int kept = 0;
  for (int i = 0; i < p.k; ++i)
    if (kept == 0 || p.v[static_cast<std::size_t>(kept - 1)] != p.v[static_cast<std::size_t>(i)])
      p.v[static_cast<std::size_t>(kept++)] = p.v[static_cast<std::size_t>(i)];
  while (kept > 1 && p.v[static_cast<std::size_t>(kept - 1)] == p.v[0]) --kept;
  p.k = kept;
}

// Smallest packed code over the dihedral images of a collapsed partition.
std::uint64_t dihedral_key(const Labels& p) {
  std::uint64_t best = ~std::uint64_t{0};
  std::array<std::uint8_t, kMax> image;
  for (int shift = 0; shift < p.k; ++shift) {
    for (int i = 0; i < p.k; ++i)
      image[static_cast<std::size_t>(i)] = p.v[static_cast<std::size_t>((i + shift) % p.k)];
    best = std::min(best, pack(image.data(), p.k));
    std::reverse(image.begin(), image.begin() + p.k);
    best = std::min(best, pack(image.data(), p.k));
  }
  return best;
}

class TopMobiusMemo {
 public:
  std::optional<std::int64_t> find(std::uint64_t key) const {
    std::shared_lock lock(mutex_);
    if (auto it = values_.find(key); it != values_.end()) return it->second;
    return std::nullopt;
  }
  void insert(std::uint64_t key, std::int64_t value) {
    std::unique_lock lock(mutex_);
    values_.emplace(key, value);
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::uint64_t, std::int64_t> values_;
};

// Canonical types, plus a front cache from raw collapsed codes so the dihedral scan runs once
// per raw form.
TopMobiusMemo& by_type() {
  static TopMobiusMemo instance;
  return instance;
}
TopMobiusMemo& by_raw() {
  static TopMobiusMemo instance;
  return instance;
}

std::int64_t top_mobius(Labels rho);

// Enumerates every non-crossing tau >= rho with at least two blocks and accumulates the
// products of the block-restricted top Moebius values.
class CoarseningSum {
 public:
  explicit CoarseningSum(const Labels& rho) : rho_(rho) {
    last_.fill(0);
    for (int e = 0; e < rho.k; ++e) last_[rho.v[static_cast<std::size_t>(e)]] = e;
    tau_of_.fill(-1);
    need_until_.fill(-1);
  }

  std::int64_t run() {
    Stack open;
    step(0, 0, open);
    return total_;
  }

 private:
  struct Stack {
    std::array<int, kMax> items{};
    std::size_t size = 0;
  };

  // Truncates the open stack to position j (inclusive) if every closed block is complete.
  bool close_above(Stack& open, std::size_t j, int element) const {
    for (std::size_t i = j + 1; i < open.size; ++i)
      if (need_until_[static_cast<std::size_t>(open.items[i])] > element) return false;
    open.size = j + 1;
    return true;
  }

  void step(int element, int block_total, Stack open) {
    if (element == rho_.k) {
      if (block_total > 1) total_ += evaluate(block_total);
      return;
    }
    const std::size_t r = rho_.v[static_cast<std::size_t>(element)];
    const auto e = static_cast<std::size_t>(element);
    if (const int forced = tau_of_[r]; forced != -1) {
      std::size_t j = 0;
      while (j < open.size && open.items[j] != forced) ++j;
      if (j == open.size || !close_above(open, j, element)) return;
      tau_[e] = static_cast<std::uint8_t>(forced);
      step(element + 1, block_total, open);
      return;
    }
    for (std::size_t j = 0; j < open.size; ++j) {
      Stack next = open;
      if (!close_above(next, j, element)) continue;
      const auto target = static_cast<std::size_t>(next.items[j]);
      const int saved_need = need_until_[target];
      tau_of_[r] = static_cast<int>(target);
      need_until_[target] = std::max(saved_need, last_[r]);
      tau_[e] = static_cast<std::uint8_t>(target);
      step(element + 1, block_total, next);
      need_until_[target] = saved_need;
      tau_of_[r] = -1;
    }
    const auto fresh = static_cast<std::size_t>(block_total);
    tau_of_[r] = block_total;
    need_until_[fresh] = last_[r];
    tau_[e] = static_cast<std::uint8_t>(fresh);
    open.items[open.size++] = block_total;
    step(element + 1, block_total + 1, open);
    tau_of_[r] = -1;
    need_until_[fresh] = -1;
  }

  std::int64_t evaluate(int block_total) const {
    std::int64_t product = 1;
    for (int b = 0; b < block_total && product != 0; ++b) {
      Labels part;
      for (int e = 0; e < rho_.k; ++e)
        if (tau_[static_cast<std::size_t>(e)] == b)
          part.v[static_cast<std::size_t>(part.k++)] = rho_.v[static_cast<std::size_t>(e)];
      product *= top_mobius(part);
    }
    return product;
  }

  const Labels& rho_;
  std::array<int, kMax> last_{};
  std::array<int, kMax> tau_of_{};
  std::array<int, kMax> need_until_{};
  std::array<std::uint8_t, kMax> tau_{};
  std::int64_t total_ = 0;
};

std::int64_t top_mobius(Labels rho) {
  collapse(rho);
  if (rho.k == 1) return 1;
  const std::uint64_t raw = pack(rho.v.data(), rho.k);
  if (auto hit = by_raw().find(raw)) return *hit;
  const std::uint64_t type = dihedral_key(rho);
  std::optional<std::int64_t> value = by_type().find(type);
  if (!value) {
    value = -CoarseningSum(unpack(type)).run();
    by_type().insert(type, *value);
  }
  by_raw().insert(raw, *value);
  return *value;
}

std::int64_t top_mobius_of_restriction(const Partition& p, const std::vector<int>& elements) {
  Labels part;
  for (int e : elements) part.v[static_cast<std::size_t>(part.k++)] = static_cast<std::uint8_t>(p.label(e));
  return top_mobius(part);
}

}  // namespace

std::int64_t mobius_nc(const Partition& pi, const Partition& sigma) {
  if (pi.size() != sigma.size()) throw OrderError("partitions of different ground sets are incomparable");
  if (!is_noncrossing(pi) || !is_noncrossing(sigma))
    throw DomainError("mobius_nc requires non-crossing arguments");
  if (!pi.refines(sigma)) throw OrderError(pi.to_string() + " does not refine " + sigma.to_string());
  std::int64_t product = 1;
  for (const auto& block : sigma.blocks()) product *= top_mobius_of_restriction(pi, block);
  return product;
}

std::int64_t mobius_bnc(const ChiMap& chi, const Partition& tau, const Partition& pi) {
  if (tau.size() != chi.size() || pi.size() != chi.size()) throw ShapeError("chi and partitions differ in size");
  const auto inverse = inverse_permutation(sigma_chi(chi));
  return mobius_nc(relabel(tau, inverse), relabel(pi, inverse));
}

const std::vector<std::int64_t>& mobius_to_top(int n) {
  const auto& lattice = nc_lattice(n);
  static std::array<std::once_flag, kMax + 1> flags;
  static std::array<std::unique_ptr<const std::vector<std::int64_t>>, kMax + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] {
    std::vector<std::int64_t> values;
    values.reserve(lattice.size());
    for (const auto& pi : lattice) {
      Labels labels;
      labels.k = n;
      for (int e = 1; e <= n; ++e) labels.v[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(pi.label(e));
      values.push_back(top_mobius(labels));
    }
    cache[slot] = std::make_unique<const std::vector<std::int64_t>>(std::move(values));
  });
  return *cache[slot];
}

}  // namespace bifree
