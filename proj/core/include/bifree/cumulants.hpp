#pragma once

#include <cstddef>
#include <vector>

#include "bifree/error.hpp"
#include "bifree/partitions.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

/// Largest degree accepted by the moment/cumulant transforms.
inline constexpr int kTransformDegreeCap = 12;
/// Largest m + n accepted by the exhaustive chi check.
inline constexpr int kChiDegreeCap = 8;

/// Values v(m, n) for 0 <= m + n <= D, stored by total degree then m descending.
template <Scalar S>
class TriangularTable {
 public:
  using value_type = S;

  TriangularTable() = default;
  explicit TriangularTable(int degree);

  int degree() const noexcept { return degree_; }
  bool contains(int m, int n) const noexcept { return m >= 0 && n >= 0 && m + n <= degree_; }

  const S& operator()(int m, int n) const { return values_[checked_index(m, n)]; }
  S& operator()(int m, int n) { return values_[checked_index(m, n)]; }

  /// Position of (m, n) in storage order.
  static constexpr std::size_t index(int m, int n) noexcept {
    const auto t = static_cast<std::size_t>(m + n);
    return t * (t + 1) / 2 + static_cast<std::size_t>(n);
  }

  friend bool operator==(const TriangularTable&, const TriangularTable&) = default;

 protected:
  std::size_t checked_index(int m, int n) const {
    if (!contains(m, n)) throw DegreeError("index outside table degree");
    return index(m, n);
  }

  int degree_ = 0;
  std::vector<S> values_;
};

/// phi(a^m b^n) for 0 <= m + n <= D; entry (0, 0) is 1.
template <Scalar S>
class MomentTable : public TriangularTable<S> {
 public:
  MomentTable() = default;
  explicit MomentTable(int degree) : TriangularTable<S>(degree) { (*this)(0, 0) = S{1}; }
};

/// kappa_{m,n} for 1 <= m + n <= D; the (0, 0) slot is held at zero.
template <Scalar S>
class CumulantTable : public TriangularTable<S> {
 public:
  CumulantTable() = default;
  explicit CumulantTable(int degree) : TriangularTable<S>(degree) {}
};

/// Converts every entry to another scalar kind.
template <Scalar To, Scalar From>
MomentTable<To> convert(const MomentTable<From>& table) {
  MomentTable<To> out(table.degree());
  for (int t = 0; t <= table.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = scalar_cast<To>(table(m, t - m));
  return out;
}
template <Scalar To, Scalar From>
CumulantTable<To> convert(const CumulantTable<From>& table) {
  CumulantTable<To> out(table.degree());
  for (int t = 1; t <= table.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = scalar_cast<To>(table(m, t - m));
  return out;
}

/// kappa_{m,n} = sum over NC(m+n) of phi_pi mu(pi, 1) on the word a^m b^n.
/// `threads` > 1 splits the entries across worker threads; results do not depend on it.
template <Scalar S>
CumulantTable<S> moments_to_cumulants(const MomentTable<S>& moments, int threads = 1);

/// phi(a^m b^n) = sum over NC(m+n) of kappa_pi on the word a^m b^n.
template <Scalar S>
MomentTable<S> cumulants_to_moments(const CumulantTable<S>& cumulants, int threads = 1);

/// The (l, r)-cumulant kappa^chi of the word c_chi(1) ... c_chi(N) for a commuting pair.
template <Scalar S>
S chi_cumulant(const MomentTable<S>& moments, const ChiMap& chi);

/// kappa^chi for every chi with m left labels, in ChiMap::with_profile order.
template <Scalar S>
std::vector<S> chi_cumulants(const MomentTable<S>& moments, int m, int n);

/// True when all chi with m left and n right labels give the same cumulant
/// (exactly for rationals, within `tolerance` for doubles).
template <Scalar S>
bool verify_chi_independence(const MomentTable<S>& moments, int m, int n, double tolerance = 1e-10);

/// One-variable free cumulants from moments m_0 = 1, m_1, ..., m_D; slot 0 of the result is 0.
template <Scalar S>
std::vector<S> free_cumulants(const std::vector<S>& moments);

/// Inverse of free_cumulants; slot 0 of the input is ignored and slot 0 of the result is 1.
template <Scalar S>
std::vector<S> free_moments(const std::vector<S>& cumulants);

/// Moments of one face: phi(a^k) (Face::left) or phi(b^k) (Face::right), k = 0..D.
template <Scalar S>
std::vector<S> marginal_moments(const MomentTable<S>& moments, Face face);

/// Row kappa_{k,0} (Face::left) or column kappa_{0,k} (Face::right), k = 0..D, slot 0 zero.
template <Scalar S>
std::vector<S> marginal_cumulants(const CumulantTable<S>& cumulants, Face face);

}  // namespace bifree
