#pragma once

#include <string>
#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

/// Additive bi-free convolution at cumulant level: entrywise sum.
template <Scalar S>
CumulantTable<S> bifree_convolve(const CumulantTable<S>& k1, const CumulantTable<S>& k2);

template <Scalar S>
struct ScaledTable {
  CumulantTable<S> table;
  /// Set for 0 < t < 1 when the caller has not certified conditional positivity.
  bool warning = false;
  std::string message;
};

/// t * K. Throws DomainError for t <= 0.
template <Scalar S>
ScaledTable<S> semigroup_scale(const CumulantTable<S>& cumulants, const S& t, bool cpsd_verified = false);

/// Moments of nu1 [+] nu2 to degree D from two 1-D moment sequences starting with 1.
template <Scalar S>
std::vector<S> free_convolve_marginal(const std::vector<S>& nu1, const std::vector<S>& nu2, int degree);

}  // namespace bifree
