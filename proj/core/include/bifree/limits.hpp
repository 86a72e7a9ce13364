#pragma once

#include <functional>
#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/measures.hpp"

namespace bifree {

/// kappa20 = s1, kappa02 = s2, kappa11 = c, everything else 0. Throws DomainError unless
/// s1, s2 > 0 and c^2 <= s1 s2.
template <Scalar S>
CumulantTable<S> bifree_gaussian(const S& s1, const S& s2, const S& c, int degree);

/// kappa_{m,n} = lambda alpha^m beta^n. Throws DomainError unless lambda > 0.
template <Scalar S>
CumulantTable<S> bifree_poisson(const S& lambda, const S& alpha, const S& beta, int degree);

/// kappa_{m,n} = lambda * integral of s^m t^n d nu for a probability measure nu.
template <Scalar S>
CumulantTable<S> compound_bifree_poisson(const S& lambda, const DiscretePlanarMeasure<S>& nu, int degree);

template <Scalar S>
using MeasureFamily = std::function<DiscretePlanarMeasure<S>(int)>;

/// N -> (1 - lambda/N) delta_(0,0) + (lambda/N) delta_(alpha,beta), defined for N >= lambda.
template <Scalar S>
MeasureFamily<S> poisson_family(const S& lambda, const S& alpha, const S& beta);

/// N -> (1 - lambda/N) delta_(0,0) + (lambda/N) nu.
template <Scalar S>
MeasureFamily<S> compound_poisson_family(const S& lambda, const DiscretePlanarMeasure<S>& nu);

/// N * integral of s^m t^n d family(N) for every N in `sizes`.
template <Scalar S>
std::vector<S> triangular_limit_estimate(const MeasureFamily<S>& family, int m, int n, const std::vector<int>& sizes);

/// Moments of the N-fold bi-free convolution power of mu: cumulants of mu scaled by N.
template <Scalar S>
MomentTable<S> row_sum_moments(const DiscretePlanarMeasure<S>& mu, int copies, int degree);

}  // namespace bifree
