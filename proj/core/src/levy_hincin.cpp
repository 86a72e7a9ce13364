#include "bifree/levy_hincin.hpp"

#include <algorithm>

namespace bifree {

namespace {

template <Scalar S>
double residual_of(const S& x) {
  return std::fabs(to_double(x));
}

template <Scalar S>
bool acceptable(const S& residual, double tolerance) {
  if constexpr (ScalarTraits<S>::exact) {
    return residual == 0;
  } else {
    return std::fabs(residual) <= tolerance;
  }
}

template <Scalar S>
S integrate(const DiscretePlanarMeasure<S>& mu, int m, int n) {
  return measure_moment(mu, m, n);
}

}  // namespace

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

template <Scalar S>
ValidationReport validate_lh(const LevyHincinData<S>& data, double tolerance) {
  ValidationReport report;
  std::vector<std::pair<S, S>> support;
  for (const auto* mu : {&data.rho1, &data.rho2, &data.rho})
    for (const auto& a : mu->atoms()) support.emplace_back(a.s, a.t);

  double first = 0.0, second = 0.0;
  bool first_ok = true, second_ok = true;
  for (const auto& [s, t] : support) {
    const S w1 = data.rho1.weight_at(s, t);
    const S w2 = data.rho2.weight_at(s, t);
    const S w = data.rho.weight_at(s, t);
    const S r1 = t * w1 - s * w;
    const S r2 = s * w2 - t * w;
    first = std::max(first, residual_of(r1));
    second = std::max(second, residual_of(r2));
    first_ok = first_ok && acceptable(r1, tolerance);
    second_ok = second_ok && acceptable(r2, tolerance);
  }
  report.checks.push_back({"t rho1 = s rho", first_ok, first});
  report.checks.push_back({"s rho2 = t rho", second_ok, second});

  const S zero{0};
  const S excess = data.rho.weight_at(zero, zero) * data.rho.weight_at(zero, zero) -
                   data.rho1.weight_at(zero, zero) * data.rho2.weight_at(zero, zero);
  bool origin_ok = excess <= S{0};
  if constexpr (!ScalarTraits<S>::exact) origin_ok = excess <= tolerance;
  report.checks.push_back({"origin atom inequality", origin_ok, std::max(0.0, to_double(excess))});

  auto positivity = [&](const char* name, const DiscretePlanarMeasure<S>& mu) {
    double worst = 0.0;
    bool ok = true;
    for (const auto& a : mu.atoms())
      if (!(a.w > S{0})) {
        ok = false;
        worst = std::max(worst, -to_double(a.w));
      }
    report.checks.push_back({name, ok, worst});
  };
  positivity("rho1 positive", data.rho1);
  positivity("rho2 positive", data.rho2);
  return report;
}

template <Scalar S>
CumulantTable<S> lh_to_cumulants(const LevyHincinData<S>& data, int degree, double tolerance) {
  CumulantTable<S> out(degree);
  if (degree >= 1) {
    out(1, 0) = data.kappa10;
    out(0, 1) = data.kappa01;
  }
  for (int t = 2; t <= degree; ++t)
    for (int m = t; m >= 0; --m) {
      const int n = t - m;
      std::vector<S> candidates;
      if (m >= 2) candidates.push_back(integrate(data.rho1, m - 2, n));
      if (n >= 2) candidates.push_back(integrate(data.rho2, m, n - 2));
      if (m >= 1 && n >= 1) candidates.push_back(integrate(data.rho, m - 1, n - 1));
      for (const auto& c : candidates)
        if (!nearly_equal(c, candidates.front(), tolerance))
          throw InconsistentDataError("kappa_{" + std::to_string(m) + "," + std::to_string(n) +
                                      "}: the rho1/rho2/rho formulas disagree");
      out(m, n) = candidates.front();
    }
  return out;
}

template <Scalar S>
BivariateSeries<S> r_transform_from_lh(const LevyHincinData<S>& data, int degree, double tolerance) {
  const auto report = validate_lh(data, tolerance);
  for (const auto& check : report.checks)
    if (!check.passed) throw InconsistentDataError("Levy-Hincin data fails: " + check.name);
  BivariateSeries<S> out(degree);
  if (degree >= 1) {
    out(1, 0) = data.kappa10;
    out(0, 1) = data.kappa01;
  }
  // z R1(z) and w R2(w) carry the pure rows; the zw kernel expands to sum s^(m-1) t^(n-1) z^m w^n.
  for (int m = 2; m <= degree; ++m) out(m, 0) = integrate(data.rho1, m - 2, 0);
  for (int n = 2; n <= degree; ++n) out(0, n) = integrate(data.rho2, 0, n - 2);
  for (int m = 1; m < degree; ++m)
    for (int n = 1; m + n <= degree; ++n) out(m, n) = integrate(data.rho, m - 1, n - 1);
  return out;
}

#define BIFREE_INSTANTIATE(S)                                                         \
  template ValidationReport validate_lh(const LevyHincinData<S>&, double);            \
  template CumulantTable<S> lh_to_cumulants(const LevyHincinData<S>&, int, double);   \
  template BivariateSeries<S> r_transform_from_lh(const LevyHincinData<S>&, int, double);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
