#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/fock.hpp"
#include "bifree/measures.hpp"
#include "bifree/series.hpp"

namespace bifree {

inline constexpr double kPsdTolerance = -1e-9;
inline constexpr double kNullTolerance = 1e-10;
inline constexpr double kShiftTolerance = 1e-8;
inline constexpr double kDiagonalizationTolerance = 1e-8;

/// (kappa10, kappa01, rho1, rho2, rho): rho1, rho2 positive, rho signed.
template <Scalar S>
struct LevyHincinData {
  S kappa10{0};
  S kappa01{0};
  DiscretePlanarMeasure<S> rho1;
  DiscretePlanarMeasure<S> rho2;
  DiscretePlanarMeasure<S> rho;

  friend bool operator==(const LevyHincinData&, const LevyHincinData&) = default;
};

template <Scalar To, Scalar From>
LevyHincinData<To> convert(const LevyHincinData<From>& data) {
  return {scalar_cast<To>(data.kappa10), scalar_cast<To>(data.kappa01), convert<To>(data.rho1),
          convert<To>(data.rho2), convert<To>(data.rho)};
}

struct ValidationCheck {
  std::string name;
  bool passed = true;
  double residual = 0.0;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Checks t rho1 = s rho, s rho2 = t rho atom by atom, |rho(0,0)|^2 <= rho1(0,0) rho2(0,0), and
/// positivity of rho1, rho2. Exact for rationals; `tolerance` for doubles. Never throws.
template <Scalar S>
ValidationReport validate_lh(const LevyHincinData<S>& data, double tolerance = 1e-10);

/// Cumulants from LH data. Every formula that applies to an index is evaluated; disagreement
/// raises InconsistentDataError naming the index.
template <Scalar S>
CumulantTable<S> lh_to_cumulants(const LevyHincinData<S>& data, int degree, double tolerance = 1e-10);

/// z R1(z) + w R2(w) + integral of zw / ((1 - zs)(1 - wt)) d rho, expanded to degree D.
/// Throws InconsistentDataError when validate_lh fails.
template <Scalar S>
BivariateSeries<S> r_transform_from_lh(const LevyHincinData<S>& data, int degree, double tolerance = 1e-10);

struct CpsdReport {
  bool passed = false;
  double min_eigenvalue = 0.0;
  int window = 0;  ///< certified monomial degree d
  std::string reason;
};

struct BoundednessReport {
  bool passed = false;
  double witness = 0.0;  ///< L = max(|S1|, |S2|, 1) when passed
  int window = 0;
  std::string reason;
};

/// Gram matrix [kappa_{alpha + beta}] over monomials 1 <= |alpha| <= d is PSD (cutoff -1e-9);
/// a vanishing kappa20 or kappa02 forces the matching mixed entries to vanish. Needs 2d <= D.
CpsdReport check_cpsd(const CumulantTable<double>& cumulants, int window);

/// Shift operators by s and t are well defined and bounded on the quotient by null
/// directions of the Gram form. Needs 2d + 2 <= D.
BoundednessReport check_cond_bounded(const CumulantTable<double>& cumulants, int window);

struct Moment2SequenceReport {
  bool passed = false;
  bool psd = false;
  double min_eigenvalue = 0.0;
  double witness = 0.0;
  int window = 0;
  std::string reason;
};

/// Same machinery over monomials 0 <= |alpha| <= d including the constant. Needs 2d + 2 <= D.
Moment2SequenceReport check_moment_2sequence(const MomentTable<double>& moments, int window);

/// Model on the quotient of monomials 1 <= |alpha| <= d with T1, T2 the compressed shifts,
/// f, g the classes of s and t. Throws DomainError when check_cpsd or check_cond_bounded fails.
FockModel<double> gns_reconstruct(const CumulantTable<double>& cumulants, int window);

/// Joint spectral decomposition of T1, T2 turned into (rho1, rho2, rho). Throws
/// CommutationError for non-commuting models and SingularityError when no randomized
/// combination T1 + gamma T2 diagonalizes both within 1e-8.
LevyHincinData<double> extract_levy_measures(const FockModel<double>& model, std::uint64_t seed = 0);

}  // namespace bifree
