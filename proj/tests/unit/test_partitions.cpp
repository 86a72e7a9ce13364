#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <set>

#include "bifree/bifree.hpp"
#include "support/oracles.hpp"

using namespace bifree;

namespace {

Partition from_oracle(const oracle::Blocks& blocks, int n) { return Partition::from_blocks(n, blocks); }

std::vector<ChiMap> all_chi(int n) {
  std::vector<ChiMap> out;
  for (int m = 0; m <= n; ++m)
    for (auto& chi : ChiMap::with_profile(m, n - m)) out.push_back(std::move(chi));
  return out;
}

}  // namespace

TEST_CASE("partition construction and canonical labels") {
  const auto p = Partition::from_blocks(5, {{2, 4}, {1}, {3, 5}});
  CHECK(p.labels() == std::vector<int>{0, 1, 2, 1, 2});
  CHECK(p.block_count() == 3);
  CHECK(Partition::from_blocks(5, p.blocks()) == p);
  CHECK(Partition::one(4).block_count() == 1);
  CHECK(Partition::zero(4).block_count() == 4);
  CHECK(Partition::zero(4).refines(Partition::one(4)));
  CHECK(Partition::from_blocks(3, {{1, 3}, {2}}).refines(Partition::one(3)));
  CHECK_FALSE(Partition::one(3).refines(Partition::from_blocks(3, {{1, 3}, {2}})));

  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}}), ParseError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 2}, {2, 3}}), ParseError);
  CHECK_THROWS_AS(Partition::from_blocks(3, {{1, 4}, {2, 3}}), ParseError);
  CHECK_THROWS_AS(Partition::from_blocks(17, {}), SizeLimitError);
}

TEST_CASE("enumerate_nc matches the brute-force crossing filter") {
  for (int n = 1; n <= 8; ++n) {
    const auto nc = enumerate_nc(n);
    std::set<Partition> expected;
    for (const auto& blocks : oracle::noncrossing(n)) expected.insert(from_oracle(blocks, n));
    CHECK(std::set<Partition>(nc.begin(), nc.end()) == expected);
    CHECK(nc.size() == expected.size());
    CHECK(std::is_sorted(nc.begin(), nc.end(), [](const Partition& a, const Partition& b) { return a.labels() < b.labels(); }));
    CHECK(&nc_lattice(n) == &nc_lattice(n));
    CHECK(nc_lattice(n) == nc);
  }
}

TEST_CASE("is_noncrossing agrees with the four-index scan on every set partition") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& blocks : oracle::all_set_partitions(n))
      CHECK(is_noncrossing(from_oracle(blocks, n)) == oracle::crossing_free(blocks, n));
}

TEST_CASE("Catalan counts") {
  for (int n = 1; n <= 10; ++n) CHECK(static_cast<std::int64_t>(enumerate_nc(n).size()) == oracle::catalan(n));
}

TEST_CASE("size cap and environment override") {
  CHECK_THROWS_AS(enumerate_nc(0), SizeLimitError);
  CHECK_THROWS_AS(enumerate_nc(17), SizeLimitError);
  CHECK(partition_size_cap() == kDefaultPartitionCap);
  ::setenv("BIFREE_MAX_N", "6", 1);
  CHECK(partition_size_cap() == 6);
  CHECK_THROWS_AS(enumerate_nc(7), SizeLimitError);
  ::setenv("BIFREE_MAX_N", "99", 1);
  CHECK(partition_size_cap() == kPartitionHardCeiling);
  ::unsetenv("BIFREE_MAX_N");
  CHECK(partition_size_cap() == kDefaultPartitionCap);
}

TEST_CASE("chi maps and sigma_chi") {
  const auto chi = ChiMap::parse("lRrL");
  CHECK(chi.to_string() == "LRRL");
  CHECK(chi.left_count() == 2);
  CHECK(sigma_chi(chi) == std::vector<int>{1, 4, 3, 2});
  CHECK(inverse_permutation(std::vector<int>{2, 3, 1}) == std::vector<int>{3, 1, 2});
  CHECK_THROWS(ChiMap::parse("LXR"));

  const auto profile = ChiMap::with_profile(2, 1);
  REQUIRE(profile.size() == 3);
  CHECK(profile[0].to_string() == "LLR");
  CHECK(profile[1].to_string() == "LRL");
  CHECK(profile[2].to_string() == "RLL");
}

TEST_CASE("BNC(chi) equals the two-line non-crossing set") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& chi : all_chi(n)) {
      std::vector<bool> is_left;
      for (auto f : chi.labels()) is_left.push_back(f == Face::left);
      std::set<Partition> expected;
      for (const auto& blocks : oracle::all_set_partitions(n))
        if (oracle::bi_noncrossing(blocks, is_left)) expected.insert(from_oracle(blocks, n));

      const auto bnc = enumerate_bnc(chi);
      std::set<Partition> images, sources;
      for (const auto& entry : bnc) {
        images.insert(entry.image);
        sources.insert(entry.source);
        CHECK(relabel(entry.source, sigma_chi(chi)) == entry.image);
      }
      CHECK(images == expected);
      CHECK(images.size() == bnc.size());
      CHECK(sources.size() == enumerate_nc(n).size());
    }
}

TEST_CASE("mobius_nc matches the lattice recursion on every interval") {
  for (int n = 1; n <= 5; ++n) {
    const auto lattice = oracle::noncrossing(n);
    for (const auto& pi : lattice)
      for (const auto& sigma : lattice) {
        const auto p = from_oracle(pi, n);
        const auto s = from_oracle(sigma, n);
        if (oracle::refines(pi, sigma, n)) {
          CHECK(mobius_nc(p, s) == oracle::lattice_mobius(pi, sigma, n));
        } else {
          CHECK_THROWS_AS(mobius_nc(p, s), OrderError);
        }
      }
  }
}

TEST_CASE("mobius_to_top matches the lattice recursion") {
  for (int n = 1; n <= 7; ++n) {
    const auto& mu = mobius_to_top(n);
    const auto& lattice = nc_lattice(n);
    REQUIRE(mu.size() == lattice.size());
    const auto top = oracle::Blocks{[n] {
      std::vector<int> all;
      for (int k = 1; k <= n; ++k) all.push_back(k);
      return all;
    }()};
    for (std::size_t i = 0; i < lattice.size(); i += (n >= 6 ? 7 : 1))
      CHECK(mu[i] == oracle::lattice_mobius(lattice[i].blocks(), top, n));
  }
}

TEST_CASE("mobius_bnc transports through sigma_chi") {
  const auto chi = ChiMap::parse("LRLR");
  const auto bnc = enumerate_bnc(chi);
  for (const auto& lower : bnc)
    for (const auto& upper : bnc)
      if (lower.source.refines(upper.source)) CHECK(mobius_bnc(chi, lower.image, upper.image) == mobius_nc(lower.source, upper.source));
  // Crossing in the ordinary sense but bi-non-crossing for this chi.
  const auto crossing = Partition::from_blocks(4, {{1, 3}, {2, 4}});
  CHECK_FALSE(is_noncrossing(crossing));
  CHECK_NOTHROW(mobius_bnc(chi, Partition::zero(4), crossing));
}
