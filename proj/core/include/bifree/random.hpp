#pragma once

#include <random>

#include "bifree/cumulants.hpp"
#include "bifree/fock.hpp"
#include "bifree/levy_hincin.hpp"
#include "bifree/measures.hpp"

namespace bifree {

using Rng = std::mt19937_64;

/// p/q with |p| <= max_numerator and 1 <= q <= max_denominator.
Rational random_rational(Rng& rng, int max_numerator, int max_denominator);

/// Probability measure with `atoms` distinct small rational atoms.
DiscretePlanarMeasure<Rational> random_planar_measure(Rng& rng, int atoms);

/// 1-D probability measure with `atoms` distinct small rational atoms.
DiscreteMeasure<Rational> random_measure(Rng& rng, int atoms);

/// Arbitrary rational table with entry (0, 0) = 1.
MomentTable<Rational> random_moment_table(Rng& rng, int degree);

/// Arbitrary rational cumulant table.
CumulantTable<Rational> random_cumulant_table(Rng& rng, int degree);

/// Commuting model with rational entries: T1 = Q diag(s) Q^T, T2 = Q diag(t) Q^T for a rational
/// orthogonal Q (Cayley transform), and f, g chosen so that T1 g = T2 f.
FockModel<Rational> random_commuting_model(Rng& rng, int dim);

/// Validated LH data: an origin Gaussian part plus `atoms` jumps in general position
/// (nonzero, pairwise distinct coordinates) with rho1 = c s^2, rho2 = c t^2, rho = c s t.
LevyHincinData<Rational> random_lh_data(Rng& rng, int atoms);

}  // namespace bifree
