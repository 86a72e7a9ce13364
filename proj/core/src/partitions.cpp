#include "bifree/partitions.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <sstream>

#include "bifree/error.hpp"

namespace bifree {

namespace {

constexpr int shift_of(int element) { return 4 * (kPartitionHardCeiling - element); }

void check_size(int n) {
  const int cap = partition_size_cap();
  if (n < 1 || n > cap)
    throw SizeLimitError("partition size " + std::to_string(n) + " outside [1, " + std::to_string(cap) + "]");
}

void extend_nc(int element, int n, std::uint64_t code, int next_label, const std::vector<int>& open,
               std::vector<Partition>& out, std::vector<int>& scratch) {
  if (element > n) {
    std::vector<int> labels(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) labels[static_cast<std::size_t>(k - 1)] = static_cast<int>((code >> shift_of(k)) & 0xFu);
    out.push_back(Partition::from_labels(labels));
    return;
  }
  // Joining an open block closes every block opened after it.
  for (std::size_t j = 0; j < open.size(); ++j) {
    std::vector<int> next(open.begin(), open.begin() + static_cast<std::ptrdiff_t>(j) + 1);
    const auto label = static_cast<std::uint64_t>(open[j]);
    extend_nc(element + 1, n, code | (label << shift_of(element)), next_label, next, out, scratch);
  }
  std::vector<int> next = open;
  next.push_back(next_label);
  extend_nc(element + 1, n, code | (static_cast<std::uint64_t>(next_label) << shift_of(element)), next_label + 1,
            next, out, scratch);
}

}  // namespace

int partition_size_cap() {
  if (const char* env = std::getenv("BIFREE_MAX_N"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != nullptr && *end == '\0' && value >= 1) return static_cast<int>(std::min<long>(value, kPartitionHardCeiling));
  }
  return kDefaultPartitionCap;
}

Partition Partition::from_labels(std::span<const int> labels) {
  const auto n = static_cast<int>(labels.size());
  if (n < 1 || n > kPartitionHardCeiling)
    throw SizeLimitError("partition size " + std::to_string(n) + " outside [1, 16]");
  // Canonicalize: relabel blocks in order of first appearance.
  std::vector<std::pair<int, int>> seen;
  Partition p;
  p.n_ = static_cast<std::uint8_t>(n);
  for (int k = 1; k <= n; ++k) {
    const int raw = labels[static_cast<std::size_t>(k - 1)];
    auto it = std::find_if(seen.begin(), seen.end(), [raw](const auto& e) { return e.first == raw; });
    int canon;
    if (it == seen.end()) {
      canon = static_cast<int>(seen.size());
      seen.emplace_back(raw, canon);
    } else {
      canon = it->second;
    }
    p.code_ |= static_cast<std::uint64_t>(canon) << shift_of(k);
  }
  return p;
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1 || n > kPartitionHardCeiling)
    throw SizeLimitError("partition size " + std::to_string(n) + " outside [1, 16]");
  std::vector<int> labels(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw ParseError("partition block " + std::to_string(b) + " is empty");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw ParseError("partition element " + std::to_string(e) + " outside [1, n]");
      auto& slot = labels[static_cast<std::size_t>(e - 1)];
      if (slot != -1) throw ParseError("partition element " + std::to_string(e) + " appears twice");
      slot = static_cast<int>(b);
    }
  }
  for (int k = 1; k <= n; ++k)
    if (labels[static_cast<std::size_t>(k - 1)] == -1)
      throw ParseError("partition does not cover element " + std::to_string(k));
  return from_labels(labels);
}

Partition Partition::one(int n) { return from_labels(std::vector<int>(static_cast<std::size_t>(n), 0)); }

Partition Partition::zero(int n) {
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) labels[static_cast<std::size_t>(k)] = k;
  return from_labels(labels);
}

int Partition::block_count() const noexcept {
  int top = -1;
  for (int k = 1; k <= n_; ++k) top = std::max(top, label(k));
  return top + 1;
}

std::vector<int> Partition::labels() const {
  std::vector<int> out(n_);
  for (int k = 1; k <= n_; ++k) out[static_cast<std::size_t>(k - 1)] = label(k);
  return out;
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(block_count()));
  for (int k = 1; k <= n_; ++k) out[static_cast<std::size_t>(label(k))].push_back(k);
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (coarser.n_ != n_) return false;
  // Each block of *this must map to a single block of coarser.
  std::array<int, kPartitionHardCeiling> image;
  image.fill(-1);
  for (int k = 1; k <= n_; ++k) {
    int& slot = image[static_cast<std::size_t>(label(k))];
    if (slot == -1)
      slot = coarser.label(k);
    else if (slot != coarser.label(k))
      return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '[';
  const auto bs = blocks();
  for (std::size_t b = 0; b < bs.size(); ++b) {
    if (b) os << ',';
    os << '[';
    for (std::size_t i = 0; i < bs[b].size(); ++i) os << (i ? "," : "") << bs[b][i];
    os << ']';
  }
  os << ']';
  return os.str();
}

ChiMap ChiMap::parse(std::string_view text) {
  std::vector<Face> labels;
  for (char c : text) {
    switch (std::toupper(static_cast<unsigned char>(c))) {
      case 'L': labels.push_back(Face::left); break;
      case 'R': labels.push_back(Face::right); break;
      default: throw ParseError("chi labels must be L or R, got '" + std::string(1, c) + "'");
    }
  }
  if (labels.empty()) throw ParseError("empty chi map");
  return ChiMap(std::move(labels));
}

std::vector<ChiMap> ChiMap::with_profile(int left_count, int right_count) {
  const int n = left_count + right_count;
  std::vector<Face> labels(static_cast<std::size_t>(n), Face::right);
  std::fill_n(labels.begin(), left_count, Face::left);
  std::vector<ChiMap> out;
  // Faces order left < right, so std::next_permutation walks lexicographically.
  do {
    out.emplace_back(labels);
  } while (std::next_permutation(labels.begin(), labels.end()));
  return out;
}

int ChiMap::left_count() const {
  return static_cast<int>(std::count(labels_.begin(), labels_.end(), Face::left));
}

std::string ChiMap::to_string() const {
  std::string s;
  for (Face f : labels_) s.push_back(f == Face::left ? 'L' : 'R');
  return s;
}

std::vector<Partition> enumerate_nc(int n) {
  check_size(n);
  std::vector<Partition> out;
  std::vector<int> scratch;
  extend_nc(1, n, 0, 0, {}, out, scratch);
  return out;
}

const std::vector<Partition>& nc_lattice(int n) {
  check_size(n);
  static std::array<std::once_flag, kPartitionHardCeiling + 1> flags;
  static std::array<std::unique_ptr<const std::vector<Partition>>, kPartitionHardCeiling + 1> cache;
  const auto slot = static_cast<std::size_t>(n);
  std::call_once(flags[slot], [&] { cache[slot] = std::make_unique<const std::vector<Partition>>(enumerate_nc(n)); });
  return *cache[slot];
}

bool is_noncrossing(const Partition& p) {
  const int n = p.size();
  std::array<int, kPartitionHardCeiling> last{};
  for (int k = 1; k <= n; ++k) last[static_cast<std::size_t>(p.label(k))] = k;
  std::array<bool, kPartitionHardCeiling> opened{};
  std::vector<int> stack;
  for (int k = 1; k <= n; ++k) {
    const int b = p.label(k);
    if (!opened[static_cast<std::size_t>(b)]) {
      opened[static_cast<std::size_t>(b)] = true;
      stack.push_back(b);
    } else if (stack.back() != b) {
      // An unfinished block opened after b separates two elements of b.
      return false;
    }
    if (last[static_cast<std::size_t>(b)] == k) stack.pop_back();
  }
  return true;
}

std::vector<int> sigma_chi(const ChiMap& chi) {
  std::vector<int> lefts;
  std::vector<int> rights;
  for (int k = 1; k <= chi.size(); ++k) (chi[k] == Face::left ? lefts : rights).push_back(k);
  std::vector<int> sigma(lefts);
  sigma.insert(sigma.end(), rights.rbegin(), rights.rend());
  return sigma;
}

std::vector<int> inverse_permutation(std::span<const int> perm) {
  std::vector<int> inv(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) inv[static_cast<std::size_t>(perm[k] - 1)] = static_cast<int>(k) + 1;
  return inv;
}

Partition relabel(const Partition& p, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != p.size()) throw ShapeError("permutation size does not match partition size");
  std::vector<int> labels(perm.size());
  for (int k = 1; k <= p.size(); ++k) labels[static_cast<std::size_t>(perm[static_cast<std::size_t>(k - 1)] - 1)] = p.label(k);
  return Partition::from_labels(labels);
}

std::vector<BncPartition> enumerate_bnc(const ChiMap& chi) {
  check_size(chi.size());
  const auto sigma = sigma_chi(chi);
  const auto& nc = nc_lattice(chi.size());
  std::vector<BncPartition> out;
  out.reserve(nc.size());
  for (const auto& pi : nc) out.push_back({relabel(pi, sigma), pi});
  return out;
}

}  // namespace bifree
