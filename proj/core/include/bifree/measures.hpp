#pragma once

#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

/// Coordinates closer than this are one atom in float mode.
inline constexpr double kAtomMergeTolerance = 1e-12;

template <Scalar S>
struct PlanarAtom {
  S s;
  S t;
  S w;
  friend bool operator==(const PlanarAtom&, const PlanarAtom&) = default;
};

template <Scalar S>
struct Atom {
  S x;
  S w;
  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Finitely supported measure on R^2. Atoms are sorted by (s, t), pairwise distinct, and carry
/// nonzero weights; unsigned measures carry strictly positive weights.
template <Scalar S>
class DiscretePlanarMeasure {
 public:
  DiscretePlanarMeasure() = default;

  /// Merges coincident atoms, drops zero weights, sorts. Throws DomainError on a negative
  /// weight unless `is_signed`.
  static DiscretePlanarMeasure from_atoms(std::vector<PlanarAtom<S>> atoms, bool is_signed = false);
  static DiscretePlanarMeasure dirac(const S& s, const S& t, const S& w = S{1});

  const std::vector<PlanarAtom<S>>& atoms() const noexcept { return atoms_; }
  bool is_signed() const noexcept { return signed_; }
  bool empty() const noexcept { return atoms_.empty(); }
  S total_mass() const;
  /// Unsigned with total mass 1 (exactly, or within 1e-12 for doubles).
  bool is_probability() const;
  /// Weight of the atom at (s, t), zero if there is none.
  S weight_at(const S& s, const S& t) const;

  friend bool operator==(const DiscretePlanarMeasure&, const DiscretePlanarMeasure&) = default;

 private:
  std::vector<PlanarAtom<S>> atoms_;
  bool signed_ = false;
};

/// Finitely supported positive measure on R, same canonical form as the planar one.
template <Scalar S>
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  static DiscreteMeasure from_atoms(std::vector<Atom<S>> atoms);
  static DiscreteMeasure dirac(const S& x);

  const std::vector<Atom<S>>& atoms() const noexcept { return atoms_; }
  S total_mass() const;
  bool is_probability() const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom<S>> atoms_;
};

enum class Axis { first, second };

/// sum of w s^m t^n.
template <Scalar S>
S measure_moment(const DiscretePlanarMeasure<S>& mu, int m, int n);

/// sum of w x^k.
template <Scalar S>
S measure_moment(const DiscreteMeasure<S>& nu, int k);

/// Pushforward onto one coordinate. Throws UnsupportedError for signed measures.
template <Scalar S>
DiscreteMeasure<S> marginal(const DiscretePlanarMeasure<S>& mu, Axis axis);

template <Scalar S>
DiscretePlanarMeasure<S> product_measure(const DiscreteMeasure<S>& nu1, const DiscreteMeasure<S>& nu2);

/// phi(a^m b^n) = integral of s^m t^n, 0 <= m + n <= D. Requires a probability measure.
template <Scalar S>
MomentTable<S> moment_table(const DiscretePlanarMeasure<S>& mu, int degree);

/// Moments k = 0..D of a 1-D probability measure.
template <Scalar S>
std::vector<S> moment_sequence(const DiscreteMeasure<S>& nu, int degree);

template <Scalar To, Scalar From>
DiscretePlanarMeasure<To> convert(const DiscretePlanarMeasure<From>& mu) {
  std::vector<PlanarAtom<To>> atoms;
  for (const auto& a : mu.atoms()) atoms.push_back({scalar_cast<To>(a.s), scalar_cast<To>(a.t), scalar_cast<To>(a.w)});
  return DiscretePlanarMeasure<To>::from_atoms(std::move(atoms), mu.is_signed());
}

}  // namespace bifree
