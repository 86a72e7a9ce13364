#include "bifree/convolution.hpp"

namespace bifree {

template <Scalar S>
CumulantTable<S> bifree_convolve(const CumulantTable<S>& k1, const CumulantTable<S>& k2) {
  if (k1.degree() != k2.degree()) throw DegreeError("cumulant tables have different degrees");
  CumulantTable<S> out(k1.degree());
  for (int t = 1; t <= k1.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = k1(m, t - m) + k2(m, t - m);
  return out;
}

template <Scalar S>
ScaledTable<S> semigroup_scale(const CumulantTable<S>& cumulants, const S& t, bool cpsd_verified) {
  if (!(t > S{0})) throw DomainError("semigroup parameter must be positive");
  ScaledTable<S> out{CumulantTable<S>(cumulants.degree()), false, {}};
  for (int k = 1; k <= cumulants.degree(); ++k)
    for (int m = k; m >= 0; --m) out.table(m, k - m) = t * cumulants(m, k - m);
  if (t < S{1} && !cpsd_verified) {
    out.warning = true;
    out.message = "t < 1: the scaled table is realizable only if the input is conditionally positive semi-definite";
  }
  return out;
}

template <Scalar S>
std::vector<S> free_convolve_marginal(const std::vector<S>& nu1, const std::vector<S>& nu2, int degree) {
  if (degree < 0 || static_cast<int>(nu1.size()) <= degree || static_cast<int>(nu2.size()) <= degree)
    throw DegreeError("moment sequences shorter than the requested degree");
  const std::vector<S> a(nu1.begin(), nu1.begin() + degree + 1);
  const std::vector<S> b(nu2.begin(), nu2.begin() + degree + 1);
  auto ka = free_cumulants(a);
  const auto kb = free_cumulants(b);
  for (std::size_t k = 1; k < ka.size(); ++k) ka[k] += kb[k];
  return free_moments(ka);
}

#define BIFREE_INSTANTIATE(S)                                                                  \
  template CumulantTable<S> bifree_convolve(const CumulantTable<S>&, const CumulantTable<S>&); \
  template ScaledTable<S> semigroup_scale(const CumulantTable<S>&, const S&, bool);            \
  template std::vector<S> free_convolve_marginal(const std::vector<S>&, const std::vector<S>&, int);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
