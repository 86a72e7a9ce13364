#include "bifree/measures.hpp"

#include <algorithm>

namespace bifree {

namespace {

template <Scalar S>
bool same_coordinate(const S& x, const S& y) {
  if constexpr (ScalarTraits<S>::exact) {
    return x == y;
  } else {
    return std::fabs(x - y) <= kAtomMergeTolerance;
  }
}

template <Scalar S>
bool is_negative(const S& x) {
  return x < S{0};
}

template <Scalar S>
bool unit_mass(const S& total) {
  if constexpr (ScalarTraits<S>::exact) {
    return total == 1;
  } else {
    return std::fabs(total - 1.0) <= 1e-12;
  }
}

}  // namespace

template <Scalar S>
DiscretePlanarMeasure<S> DiscretePlanarMeasure<S>::from_atoms(std::vector<PlanarAtom<S>> atoms, bool is_signed) {
  DiscretePlanarMeasure out;
  out.signed_ = is_signed;
  for (auto& atom : atoms) {
    if (!is_signed && is_negative(atom.w)) throw DomainError("negative weight in an unsigned measure");
    auto it = std::find_if(out.atoms_.begin(), out.atoms_.end(), [&](const PlanarAtom<S>& a) {
      return same_coordinate(a.s, atom.s) && same_coordinate(a.t, atom.t);
    });
    if (it == out.atoms_.end()) {
      out.atoms_.push_back(std::move(atom));
    } else {
      it->w += atom.w;
    }
  }
  std::erase_if(out.atoms_, [](const PlanarAtom<S>& a) { return a.w == S{0}; });
  std::sort(out.atoms_.begin(), out.atoms_.end(),
            [](const PlanarAtom<S>& x, const PlanarAtom<S>& y) { return x.s != y.s ? x.s < y.s : x.t < y.t; });
  return out;
}

template <Scalar S>
DiscretePlanarMeasure<S> DiscretePlanarMeasure<S>::dirac(const S& s, const S& t, const S& w) {
  return from_atoms({{s, t, w}}, w < S{0});
}

template <Scalar S>
S DiscretePlanarMeasure<S>::total_mass() const {
  S total{0};
  for (const auto& a : atoms_) total += a.w;
  return total;
}

template <Scalar S>
bool DiscretePlanarMeasure<S>::is_probability() const {
  if (signed_) return false;
  return unit_mass(total_mass());
}

template <Scalar S>
S DiscretePlanarMeasure<S>::weight_at(const S& s, const S& t) const {
  for (const auto& a : atoms_)
    if (same_coordinate(a.s, s) && same_coordinate(a.t, t)) return a.w;
  return S{0};
}

template <Scalar S>
DiscreteMeasure<S> DiscreteMeasure<S>::from_atoms(std::vector<Atom<S>> atoms) {
  DiscreteMeasure out;
  for (auto& atom : atoms) {
    if (is_negative(atom.w)) throw DomainError("negative weight in a measure");
    auto it = std::find_if(out.atoms_.begin(), out.atoms_.end(),
                           [&](const Atom<S>& a) { return same_coordinate(a.x, atom.x); });
    if (it == out.atoms_.end()) {
      out.atoms_.push_back(std::move(atom));
    } else {
      it->w += atom.w;
    }
  }
  std::erase_if(out.atoms_, [](const Atom<S>& a) { return a.w == S{0}; });
  std::sort(out.atoms_.begin(), out.atoms_.end(), [](const Atom<S>& x, const Atom<S>& y) { return x.x < y.x; });
  return out;
}

template <Scalar S>
DiscreteMeasure<S> DiscreteMeasure<S>::dirac(const S& x) {
  return from_atoms({{x, S{1}}});
}

template <Scalar S>
S DiscreteMeasure<S>::total_mass() const {
  S total{0};
  for (const auto& a : atoms_) total += a.w;
  return total;
}

template <Scalar S>
bool DiscreteMeasure<S>::is_probability() const {
  return unit_mass(total_mass());
}

template <Scalar S>
S measure_moment(const DiscretePlanarMeasure<S>& mu, int m, int n) {
  S total{0};
  for (const auto& a : mu.atoms()) total += a.w * pow_int(a.s, m) * pow_int(a.t, n);
  return total;
}

template <Scalar S>
S measure_moment(const DiscreteMeasure<S>& nu, int k) {
  S total{0};
  for (const auto& a : nu.atoms()) total += a.w * pow_int(a.x, k);
  return total;
}

template <Scalar S>
DiscreteMeasure<S> marginal(const DiscretePlanarMeasure<S>& mu, Axis axis) {
  if (mu.is_signed()) throw UnsupportedError("marginal of a signed measure");
  std::vector<Atom<S>> atoms;
  for (const auto& a : mu.atoms()) atoms.push_back({axis == Axis::first ? a.s : a.t, a.w});
  return DiscreteMeasure<S>::from_atoms(std::move(atoms));
}

template <Scalar S>
DiscretePlanarMeasure<S> product_measure(const DiscreteMeasure<S>& nu1, const DiscreteMeasure<S>& nu2) {
  std::vector<PlanarAtom<S>> atoms;
  for (const auto& x : nu1.atoms())
    for (const auto& y : nu2.atoms()) atoms.push_back({x.x, y.x, x.w * y.w});
  return DiscretePlanarMeasure<S>::from_atoms(std::move(atoms));
}

template <Scalar S>
MomentTable<S> moment_table(const DiscretePlanarMeasure<S>& mu, int degree) {
  if (!mu.is_probability()) throw DomainError("moment table requires a probability measure");
  MomentTable<S> out(degree);
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = measure_moment(mu, m, t - m);
  return out;
}

template <Scalar S>
std::vector<S> moment_sequence(const DiscreteMeasure<S>& nu, int degree) {
  if (!nu.is_probability()) throw DomainError("moment sequence requires a probability measure");
  std::vector<S> out{S{1}};
  for (int k = 1; k <= degree; ++k) out.push_back(measure_moment(nu, k));
  return out;
}

#define BIFREE_INSTANTIATE(S)                                                                      \
  template class DiscretePlanarMeasure<S>;                                                         \
  template class DiscreteMeasure<S>;                                                               \
  template S measure_moment(const DiscretePlanarMeasure<S>&, int, int);                            \
  template S measure_moment(const DiscreteMeasure<S>&, int);                                       \
  template DiscreteMeasure<S> marginal(const DiscretePlanarMeasure<S>&, Axis);                     \
  template DiscretePlanarMeasure<S> product_measure(const DiscreteMeasure<S>&, const DiscreteMeasure<S>&); \
  template MomentTable<S> moment_table(const DiscretePlanarMeasure<S>&, int);                      \
  template std::vector<S> moment_sequence(const DiscreteMeasure<S>&, int);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
