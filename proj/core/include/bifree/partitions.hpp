#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bifree {

/// Hard ceiling on partition size; BIFREE_MAX_N may lower or raise the cap up to this.
inline constexpr int kPartitionHardCeiling = 16;
inline constexpr int kDefaultPartitionCap = 14;

/// Current partition size cap (14 unless overridden by the BIFREE_MAX_N environment variable).
int partition_size_cap();

/// Set partition of {1..n}, n <= 16, stored as a packed restricted-growth string.
///
/// Element k (1-based) carries the 0-based label of its block; labels are assigned in order of
/// block minima, so the encoding is canonical and numeric order of the packed code equals
/// lexicographic order of the label string.
class Partition {
 public:
  Partition() = default;

  /// Builds from arbitrary block lists; validates disjointness and coverage of {1..n}.
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  /// Builds from arbitrary (not necessarily canonical) block labels, one per element.
  static Partition from_labels(std::span<const int> labels);

  static Partition one(int n);
  static Partition zero(int n);

  int size() const noexcept { return n_; }
  int block_count() const noexcept;
  /// 0-based canonical block label of a 1-based element.
  int label(int element) const noexcept {
    return static_cast<int>((code_ >> (4 * (kPartitionHardCeiling - element))) & 0xFu);
  }
  std::vector<int> labels() const;
  /// Blocks as sorted 1-based element lists, ordered by minimum.
  std::vector<std::vector<int>> blocks() const;

  std::uint64_t code() const noexcept { return code_; }

  /// True when every block of *this lies inside a block of `coarser` (this <= coarser).
  bool refines(const Partition& coarser) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

 private:
  std::uint8_t n_ = 0;
  std::uint64_t code_ = 0;
};

enum class Face : std::uint8_t { left, right };

/// Labelling chi: [n] -> {left, right}.
class ChiMap {
 public:
  ChiMap() = default;
  explicit ChiMap(std::vector<Face> labels) : labels_(std::move(labels)) {}
  /// Parses strings such as "LRR" (case-insensitive).
  static ChiMap parse(std::string_view text);
  /// All maps on [m+n] with exactly m left labels, in lexicographic order (L < R).
  static std::vector<ChiMap> with_profile(int left_count, int right_count);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  Face operator[](int element) const { return labels_.at(static_cast<std::size_t>(element - 1)); }
  const std::vector<Face>& labels() const noexcept { return labels_; }
  int left_count() const;
  std::string to_string() const;

 private:
  std::vector<Face> labels_;
};

/// Non-crossing partitions of [n] in lexicographic order of their label strings.
std::vector<Partition> enumerate_nc(int n);

/// Shared immutable copy of NC(n); avoids re-enumeration in hot loops.
const std::vector<Partition>& nc_lattice(int n);

bool is_noncrossing(const Partition& p);

/// sigma_chi as a 1-based image list: result[k-1] = sigma_chi(k).
std::vector<int> sigma_chi(const ChiMap& chi);

std::vector<int> inverse_permutation(std::span<const int> perm);

/// perm . p: every element k is relabelled to perm[k-1].
Partition relabel(const Partition& p, std::span<const int> perm);

struct BncPartition {
  Partition image;   ///< sigma_chi . source, a member of BNC(chi)
  Partition source;  ///< the non-crossing partition it came from
};

/// BNC(chi) = sigma_chi . NC(n), listed in the order of the source partitions.
std::vector<BncPartition> enumerate_bnc(const ChiMap& chi);

/// Moebius function of the interval [pi, sigma] in NC(n).
std::int64_t mobius_nc(const Partition& pi, const Partition& sigma);

/// Moebius function on NC_chi(n), transported through sigma_chi.
std::int64_t mobius_bnc(const ChiMap& chi, const Partition& tau, const Partition& pi);

/// mu(pi, 1_n) for every pi in nc_lattice(n), index-aligned with it.
const std::vector<std::int64_t>& mobius_to_top(int n);

}  // namespace bifree
