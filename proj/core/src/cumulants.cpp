#include "bifree/cumulants.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <utility>

#include "block_types.hpp"

namespace bifree {

namespace detail {

namespace {

using TermsByM = std::vector<std::vector<BlockTerm>>;

TermsByM build_terms(int total) {
  const auto& lattice = nc_lattice(total);
  const auto& mobius = mobius_to_top(total);
  std::vector<std::map<std::vector<std::uint16_t>, std::pair<std::int64_t, std::int64_t>>> grouped(
      static_cast<std::size_t>(total + 1));
  std::vector<std::uint16_t> key;
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    const auto blocks = lattice[i].blocks();
    for (int m = 0; m <= total; ++m) {
      key.clear();
      for (const auto& block : blocks) {
        const auto a = static_cast<std::uint16_t>(std::count_if(block.begin(), block.end(), [m](int e) { return e <= m; }));
        const auto b = static_cast<std::uint16_t>(block.size() - a);
        key.push_back(static_cast<std::uint16_t>(a << 8 | b));
      }
      std::sort(key.begin(), key.end());
      auto& slot = grouped[static_cast<std::size_t>(m)][key];
      slot.first += mobius[i];
      slot.second += 1;
    }
  }
  TermsByM out(static_cast<std::size_t>(total + 1));
  for (int m = 0; m <= total; ++m) {
    for (const auto& [k, sums] : grouped[static_cast<std::size_t>(m)]) {
      BlockTerm term{{}, sums.first, sums.second};
      for (auto packed : k)
        term.blocks.push_back({static_cast<std::uint8_t>(packed >> 8), static_cast<std::uint8_t>(packed & 0xFF)});
      out[static_cast<std::size_t>(m)].push_back(std::move(term));
    }
  }
  return out;
}

}  // namespace

const std::vector<BlockTerm>& block_terms(int total, int m) {
  static std::array<std::once_flag, kTransformDegreeCap + 1> flags;
  static std::array<std::unique_ptr<const TermsByM>, kTransformDegreeCap + 1> cache;
  if (total < 1 || total > kTransformDegreeCap) throw SizeLimitError("transform degree outside [1, 12]");
  const auto slot = static_cast<std::size_t>(total);
  std::call_once(flags[slot], [&] { cache[slot] = std::make_unique<const TermsByM>(build_terms(total)); });
  return (*cache[slot])[static_cast<std::size_t>(m)];
}

}  // namespace detail

template <Scalar S>
TriangularTable<S>::TriangularTable(int degree) : degree_(degree) {
  if (degree < 0) throw DegreeError("negative table degree");
  values_.assign(index(0, degree) + 1, S{0});
}

namespace {

void check_transform_degree(int degree) {
  if (degree > kTransformDegreeCap)
    throw SizeLimitError("table degree " + std::to_string(degree) + " exceeds the transform cap of 12");
}

// Sums coefficient * prod table(a, b) over the block types of the word a^m b^n.
template <Scalar S, class Table, class Coefficient>
S sum_over_types(const Table& table, int m, int n, Coefficient coefficient) {
  S total{0};
  for (const auto& term : detail::block_terms(m + n, m)) {
    const std::int64_t c = coefficient(term);
    if (c == 0) continue;
    S product = static_cast<S>(c);
    for (const auto& block : term.blocks) {
      product *= table(block.a, block.b);
      if (is_zero(product)) break;
    }
    total += product;
  }
  return total;
}

// Fills entries of total degree >= first in parallel; every entry is computed independently.
template <class Out, class Fill>
void fill_entries(Out& out, int first, int threads, Fill fill) {
  std::vector<std::pair<int, int>> entries;
  for (int t = first; t <= out.degree(); ++t)
    for (int m = t; m >= 0; --m) entries.emplace_back(m, t - m);
  for (int t = first; t <= out.degree(); ++t) detail::block_terms(t, 0);
  const auto workers = static_cast<std::size_t>(std::clamp(threads, 1, 64));
  if (workers == 1 || entries.size() < 2) {
    for (auto [m, n] : entries) out(m, n) = fill(m, n);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < entries.size(); i += workers) {
        auto [m, n] = entries[i];
        out(m, n) = fill(m, n);
      }
    });
  }
}

}  // namespace

template <Scalar S>
CumulantTable<S> moments_to_cumulants(const MomentTable<S>& moments, int threads) {
  check_transform_degree(moments.degree());
  CumulantTable<S> out(moments.degree());
  fill_entries(out, 1, threads, [&](int m, int n) {
    return sum_over_types<S>(moments, m, n, [](const detail::BlockTerm& t) { return t.mobius_sum; });
  });
  return out;
}

template <Scalar S>
MomentTable<S> cumulants_to_moments(const CumulantTable<S>& cumulants, int threads) {
  check_transform_degree(cumulants.degree());
  MomentTable<S> out(cumulants.degree());
  fill_entries(out, 1, threads, [&](int m, int n) {
    return sum_over_types<S>(cumulants, m, n, [](const detail::BlockTerm& t) { return t.count; });
  });
  return out;
}

template <Scalar S>
S chi_cumulant(const MomentTable<S>& moments, const ChiMap& chi) {
  const int total = chi.size();
  if (total < 1 || total > kChiDegreeCap) throw SizeLimitError("chi length outside [1, 8]");
  if (total > moments.degree()) throw DegreeError("moment table degree below chi length");
  const auto sigma = sigma_chi(chi);
  const auto& lattice = nc_lattice(total);
  const auto& mobius = mobius_to_top(total);
  S result{0};
  for (std::size_t i = 0; i < lattice.size(); ++i) {
    S product = static_cast<S>(mobius[i]);
    for (const auto& block : lattice[i].blocks()) {
      int a = 0;
      for (int k : block)
        if (chi[sigma[static_cast<std::size_t>(k - 1)]] == Face::left) ++a;
      product *= moments(a, static_cast<int>(block.size()) - a);
    }
    result += product;
  }
  return result;
}

template <Scalar S>
std::vector<S> chi_cumulants(const MomentTable<S>& moments, int m, int n) {
  if (m < 0 || n < 0 || m + n < 1 || m + n > kChiDegreeCap) throw SizeLimitError("m + n outside [1, 8]");
  std::vector<S> values;
  for (const auto& chi : ChiMap::with_profile(m, n)) values.push_back(chi_cumulant(moments, chi));
  return values;
}

template <Scalar S>
bool verify_chi_independence(const MomentTable<S>& moments, int m, int n, double tolerance) {
  const auto values = chi_cumulants(moments, m, n);
  return std::all_of(values.begin(), values.end(),
                     [&](const S& v) { return nearly_equal(v, values.front(), tolerance); });
}

template <Scalar S>
std::vector<S> free_cumulants(const std::vector<S>& moments) {
  if (moments.empty() || moments.front() != S{1}) throw DomainError("moment sequence must start with 1");
  const int degree = static_cast<int>(moments.size()) - 1;
  check_transform_degree(degree);
  auto lookup = [&](int a, int) -> const S& { return moments[static_cast<std::size_t>(a)]; };
  std::vector<S> out(moments.size(), S{0});
  for (int k = 1; k <= degree; ++k)
    out[static_cast<std::size_t>(k)] =
        sum_over_types<S>(lookup, k, 0, [](const detail::BlockTerm& t) { return t.mobius_sum; });
  return out;
}

template <Scalar S>
std::vector<S> free_moments(const std::vector<S>& cumulants) {
  if (cumulants.empty()) throw DomainError("empty cumulant sequence");
  const int degree = static_cast<int>(cumulants.size()) - 1;
  check_transform_degree(degree);
  auto lookup = [&](int a, int) -> const S& { return cumulants[static_cast<std::size_t>(a)]; };
  std::vector<S> out(cumulants.size(), S{0});
  out[0] = S{1};
  for (int k = 1; k <= degree; ++k)
    out[static_cast<std::size_t>(k)] =
        sum_over_types<S>(lookup, k, 0, [](const detail::BlockTerm& t) { return t.count; });
  return out;
}

template <Scalar S>
std::vector<S> marginal_moments(const MomentTable<S>& moments, Face face) {
  std::vector<S> out;
  for (int k = 0; k <= moments.degree(); ++k) out.push_back(face == Face::left ? moments(k, 0) : moments(0, k));
  return out;
}

template <Scalar S>
std::vector<S> marginal_cumulants(const CumulantTable<S>& cumulants, Face face) {
  std::vector<S> out{S{0}};
  for (int k = 1; k <= cumulants.degree(); ++k)
    out.push_back(face == Face::left ? cumulants(k, 0) : cumulants(0, k));
  return out;
}

#define BIFREE_INSTANTIATE(S)                                                             \
  template class TriangularTable<S>;                                                      \
  template CumulantTable<S> moments_to_cumulants(const MomentTable<S>&, int);             \
  template MomentTable<S> cumulants_to_moments(const CumulantTable<S>&, int);             \
  template S chi_cumulant(const MomentTable<S>&, const ChiMap&);                          \
  template std::vector<S> chi_cumulants(const MomentTable<S>&, int, int);                 \
  template bool verify_chi_independence(const MomentTable<S>&, int, int, double);         \
  template std::vector<S> free_cumulants(const std::vector<S>&);                          \
  template std::vector<S> free_moments(const std::vector<S>&);                            \
  template std::vector<S> marginal_moments(const MomentTable<S>&, Face);                  \
  template std::vector<S> marginal_cumulants(const CumulantTable<S>&, Face);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
