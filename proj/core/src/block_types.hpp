#pragma once

// Aggregated block-content types of NC(N) for the word a^m b^(N-m).

#include <cstdint>
#include <vector>

namespace bifree::detail {

struct BlockContent {
  std::uint8_t a;
  std::uint8_t b;
};

struct BlockTerm {
  std::vector<BlockContent> blocks;  ///< sorted multiset of (a-count, b-count)
  std::int64_t mobius_sum;           ///< sum of mu(pi, 1_N) over partitions of this type
  std::int64_t count;                ///< number of partitions of this type
};

/// Terms for the word with m letters a followed by N - m letters b. Cached per N.
const std::vector<BlockTerm>& block_terms(int total, int m);

}  // namespace bifree::detail
