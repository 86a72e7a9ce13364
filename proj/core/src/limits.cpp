#include "bifree/limits.hpp"

#include "bifree/convolution.hpp"

namespace bifree {

template <Scalar S>
CumulantTable<S> bifree_gaussian(const S& s1, const S& s2, const S& c, int degree) {
  if (!(s1 > S{0}) || !(s2 > S{0})) throw DomainError("gaussian variances must be positive");
  if (c * c > s1 * s2) throw DomainError("gaussian covariance violates c^2 <= s1 s2");
  if (degree < 2) throw DegreeError("gaussian table needs degree >= 2");
  CumulantTable<S> out(degree);
  out(2, 0) = s1;
  out(0, 2) = s2;
  out(1, 1) = c;
  return out;
}

template <Scalar S>
CumulantTable<S> bifree_poisson(const S& lambda, const S& alpha, const S& beta, int degree) {
  if (!(lambda > S{0})) throw DomainError("poisson rate must be positive");
  CumulantTable<S> out(degree);
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = lambda * pow_int(alpha, m) * pow_int(beta, t - m);
  return out;
}

template <Scalar S>
CumulantTable<S> compound_bifree_poisson(const S& lambda, const DiscretePlanarMeasure<S>& nu, int degree) {
  if (!(lambda > S{0})) throw DomainError("poisson rate must be positive");
  if (!nu.is_probability()) throw DomainError("jump distribution must be a probability measure");
  CumulantTable<S> out(degree);
  for (int t = 1; t <= degree; ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = lambda * measure_moment(nu, m, t - m);
  return out;
}

template <Scalar S>
MeasureFamily<S> compound_poisson_family(const S& lambda, const DiscretePlanarMeasure<S>& nu) {
  if (!(lambda > S{0})) throw DomainError("poisson rate must be positive");
  if (!nu.is_probability()) throw DomainError("jump distribution must be a probability measure");
  return [lambda, nu](int copies) {
    const S p = lambda / static_cast<S>(copies);
    if (copies < 1 || p > S{1}) throw DomainError("family needs N >= lambda");
    std::vector<PlanarAtom<S>> atoms{{S{0}, S{0}, S{1} - p}};
    for (const auto& a : nu.atoms()) atoms.push_back({a.s, a.t, p * a.w});
    return DiscretePlanarMeasure<S>::from_atoms(std::move(atoms));
  };
}

template <Scalar S>
MeasureFamily<S> poisson_family(const S& lambda, const S& alpha, const S& beta) {
  return compound_poisson_family(lambda, DiscretePlanarMeasure<S>::dirac(alpha, beta));
}

template <Scalar S>
std::vector<S> triangular_limit_estimate(const MeasureFamily<S>& family, int m, int n, const std::vector<int>& sizes) {
  std::vector<S> out;
  for (int copies : sizes) out.push_back(static_cast<S>(copies) * measure_moment(family(copies), m, n));
  return out;
}

template <Scalar S>
MomentTable<S> row_sum_moments(const DiscretePlanarMeasure<S>& mu, int copies, int degree) {
  if (copies < 1) throw DomainError("row sum needs N >= 1");
  const auto cumulants = moments_to_cumulants(moment_table(mu, degree));
  return cumulants_to_moments(semigroup_scale(cumulants, static_cast<S>(copies)).table);
}

#define BIFREE_INSTANTIATE(S)                                                                        \
  template CumulantTable<S> bifree_gaussian(const S&, const S&, const S&, int);                      \
  template CumulantTable<S> bifree_poisson(const S&, const S&, const S&, int);                       \
  template CumulantTable<S> compound_bifree_poisson(const S&, const DiscretePlanarMeasure<S>&, int); \
  template MeasureFamily<S> poisson_family(const S&, const S&, const S&);                            \
  template MeasureFamily<S> compound_poisson_family(const S&, const DiscretePlanarMeasure<S>&);      \
  template std::vector<S> triangular_limit_estimate(const MeasureFamily<S>&, int, int, const std::vector<int>&); \
  template MomentTable<S> row_sum_moments(const DiscretePlanarMeasure<S>&, int, int);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
