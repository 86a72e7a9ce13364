// Gram-form checks, GNS reconstruction and joint spectral extraction (double precision).

#include <algorithm>
#include <cmath>
#include <random>

#include "bifree/levy_hincin.hpp"

namespace bifree {

namespace {

struct Monomial {
  int m;
  int n;
};

// Monomials s^m t^n with lowest <= m + n <= d, by total degree then m descending.
std::vector<Monomial> monomials(int lowest, int window) {
  std::vector<Monomial> out;
  for (int t = lowest; t <= window; ++t)
    for (int m = t; m >= 0; --m) out.push_back({m, t - m});
  return out;
}

// [s^p t^q x, y] for x, y running over `basis`.
template <class Lookup>
DenseMatrix<double> gram(const std::vector<Monomial>& basis, int p, int q, Lookup value) {
  const int size = static_cast<int>(basis.size());
  DenseMatrix<double> out(size, size);
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      const auto& a = basis[static_cast<std::size_t>(i)];
      const auto& b = basis[static_cast<std::size_t>(j)];
      out(i, j) = value(a.m + b.m + p, a.n + b.n + q);
    }
  return out;
}

double entry_scale(const DenseMatrix<double>& g) { return std::max(1.0, max_abs(g)); }

// Quotient of a PSD Gram form: kept eigenpairs (value > cutoff) and null vectors.
struct Quotient {
  std::vector<double> values;
  std::vector<Vector<double>> kept;
  std::vector<Vector<double>> null;
  double min_eigenvalue = 0.0;
};

Quotient quotient(const DenseMatrix<double>& g) {
  const auto eig = eigen_symmetric(g);
  const double cutoff = kNullTolerance * entry_scale(g);
  Quotient out;
  out.min_eigenvalue = eig.values.empty() ? 0.0 : eig.values.front();
  // Largest eigenvalues first so the model basis is deterministic.
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] > cutoff) {
      out.values.push_back(eig.values[k]);
      out.kept.push_back(eig.vectors[k]);
    } else {
      out.null.push_back(eig.vectors[k]);
    }
  }
  return out;
}

// Lambda^{-1/2} V+^T A V+ Lambda^{-1/2}.
DenseMatrix<double> compress(const Quotient& q, const DenseMatrix<double>& a) {
  const int r = static_cast<int>(q.kept.size());
  DenseMatrix<double> out(r, r);
  for (int i = 0; i < r; ++i) {
    const auto av = a * q.kept[static_cast<std::size_t>(i)];
    for (int j = 0; j < r; ++j) {
      out(i, j) = dot(q.kept[static_cast<std::size_t>(j)], av) /
                  std::sqrt(q.values[static_cast<std::size_t>(i)] * q.values[static_cast<std::size_t>(j)]);
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const double mean = 0.5 * (out(i, j) + out(j, i));
      out(i, j) = mean;
      out(j, i) = mean;
    }
  return out;
}

struct ShiftCheck {
  bool passed = false;
  double witness = 0.0;
  std::string reason;
  DenseMatrix<double> s1;
  DenseMatrix<double> s2;
};

// Shift operators on the quotient: null directions must stay null under s and t, and the
// forms of s^2, st, t^2 must vanish on them. Witness L = max(|S1|, |S2|, 1).
template <class Lookup>
ShiftCheck check_shifts(const std::vector<Monomial>& basis, const DenseMatrix<double>& g, Lookup value) {
  ShiftCheck out;
  const auto q = quotient(g);
  const double magnitude = entry_scale(g);
  const double tol = kShiftTolerance * magnitude;
  const struct {
    int p, q;
  } shifts[] = {{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
  std::vector<DenseMatrix<double>> forms;
  for (const auto& s : shifts) forms.push_back(gram(basis, s.p, s.q, value));

  for (const auto& nv : q.null) {
    for (std::size_t k = 0; k < 2; ++k)
      if (max_abs(forms[k] * nv) > tol) {
        out.reason = "shift of a null vector is not null";
        return out;
      }
    for (std::size_t k = 2; k < forms.size(); ++k)
      if (std::fabs(dot(nv, forms[k] * nv)) > tol) {
        out.reason = "quadratic shift form does not vanish on a null vector";
        return out;
      }
  }
  out.s1 = compress(q, forms[0]);
  out.s2 = compress(q, forms[1]);
  const double l = std::max({spectral_radius_symmetric(out.s1), spectral_radius_symmetric(out.s2), 1.0});
  out.passed = true;
  out.witness = l;
  return out;
}

auto cumulant_lookup(const CumulantTable<double>& k) {
  return [&k](int m, int n) { return k(m, n); };
}

}  // namespace

CpsdReport check_cpsd(const CumulantTable<double>& cumulants, int window) {
  if (window < 1 || 2 * window > cumulants.degree()) throw DegreeError("check_cpsd needs 1 <= d and 2d <= D");
  CpsdReport report;
  report.window = window;
  const auto basis = monomials(1, window);
  const auto g = gram(basis, 0, 0, cumulant_lookup(cumulants));
  const auto eig = eigen_symmetric(g);
  report.min_eigenvalue = eig.values.front();
  if (report.min_eigenvalue < kPsdTolerance * entry_scale(g)) {
    report.reason = "Gram matrix has a negative eigenvalue";
    return report;
  }
  const double zero_tol = -kPsdTolerance;
  const bool left_null = std::fabs(cumulants(2, 0)) <= zero_tol;
  const bool right_null = std::fabs(cumulants(0, 2)) <= zero_tol;
  for (int t = 2; t <= 2 * window; ++t)
    for (int m = t; m >= 0; --m) {
      const int n = t - m;
      if ((left_null && m >= 1) || (right_null && n >= 1)) {
        if (std::fabs(cumulants(m, n)) > zero_tol) {
          report.reason = "vanishing kappa20 or kappa02 forces kappa_{" + std::to_string(m) + "," +
                          std::to_string(n) + "} = 0";
          return report;
        }
      }
    }
  report.passed = true;
  return report;
}

BoundednessReport check_cond_bounded(const CumulantTable<double>& cumulants, int window) {
  if (window < 1 || 2 * window + 2 > cumulants.degree())
    throw DegreeError("check_cond_bounded needs 1 <= d and 2d + 2 <= D");
  BoundednessReport report;
  report.window = window;
  const auto cpsd = check_cpsd(cumulants, window);
  if (!cpsd.passed) {
    report.reason = "not conditionally positive semi-definite: " + cpsd.reason;
    return report;
  }
  const auto basis = monomials(1, window);
  const auto lookup = cumulant_lookup(cumulants);
  const auto shifts = check_shifts(basis, gram(basis, 0, 0, lookup), lookup);
  report.passed = shifts.passed;
  report.witness = shifts.witness;
  report.reason = shifts.reason;
  return report;
}

Moment2SequenceReport check_moment_2sequence(const MomentTable<double>& moments, int window) {
  if (window < 1 || 2 * window + 2 > moments.degree())
    throw DegreeError("check_moment_2sequence needs 1 <= d and 2d + 2 <= D");
  Moment2SequenceReport report;
  report.window = window;
  const auto basis = monomials(0, window);
  const auto lookup = [&moments](int m, int n) { return moments(m, n); };
  const auto g = gram(basis, 0, 0, lookup);
  const auto eig = eigen_symmetric(g);
  report.min_eigenvalue = eig.values.front();
  report.psd = report.min_eigenvalue >= kPsdTolerance * entry_scale(g) && moments(0, 0) > 0.0;
  if (!report.psd) {
    report.reason = "Hankel form is not positive semi-definite";
    return report;
  }
  const auto shifts = check_shifts(basis, g, lookup);
  report.passed = shifts.passed;
  report.witness = shifts.witness;
  report.reason = shifts.reason;
  return report;
}

FockModel<double> gns_reconstruct(const CumulantTable<double>& cumulants, int window) {
  const auto bounded = check_cond_bounded(cumulants, window);
  if (!bounded.passed) throw DomainError("table is not certified infinitely divisible: " + bounded.reason);
  const auto basis = monomials(1, window);
  const auto lookup = cumulant_lookup(cumulants);
  const auto q = quotient(gram(basis, 0, 0, lookup));
  const int r = static_cast<int>(q.kept.size());

  FockModel<double> model;
  model.dim = r;
  model.t1 = compress(q, gram(basis, 1, 0, lookup));
  model.t2 = compress(q, gram(basis, 0, 1, lookup));
  // Class of a monomial: Lambda^{1/2} V+^T e_alpha. Basis slots 0 and 1 are s and t.
  for (int i = 0; i < r; ++i) {
    const double root = std::sqrt(q.values[static_cast<std::size_t>(i)]);
    model.f.push_back(root * q.kept[static_cast<std::size_t>(i)][0]);
    model.g.push_back(root * q.kept[static_cast<std::size_t>(i)][1]);
  }
  model.lambda1 = cumulants(1, 0);
  model.lambda2 = cumulants(0, 1);
  return model;
}

LevyHincinData<double> extract_levy_measures(const FockModel<double>& model, std::uint64_t seed) {
  model.validate();
  const double magnitude = std::max({1.0, max_abs(model.t1), max_abs(model.t2)});
  const double tol = kDiagonalizationTolerance * magnitude;
  const auto report = check_commutation(model, tol);
  if (!report.commute) throw CommutationError("model does not commute: " + report.violations.front());

  LevyHincinData<double> out;
  out.kappa10 = model.lambda1;
  out.kappa01 = model.lambda2;
  if (model.dim == 0) return out;

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> gamma_dist(0.5, 1.5);
  std::vector<Vector<double>> basis;
  std::vector<double> s, t;
  for (int attempt = 0; attempt < 5 && basis.empty(); ++attempt) {
    const double gamma = gamma_dist(rng);
    const auto eig = eigen_symmetric(model.t1 + scale(model.t2, gamma));
    std::vector<double> s_try, t_try;
    bool diagonal = true;
    for (const auto& u : eig.vectors) {
      const auto t1u = model.t1 * u;
      const auto t2u = model.t2 * u;
      const double sk = dot(u, t1u);
      const double tk = dot(u, t2u);
      if (max_abs(t1u - scale(u, sk)) > tol || max_abs(t2u - scale(u, tk)) > tol) {
        diagonal = false;
        break;
      }
      s_try.push_back(sk);
      t_try.push_back(tk);
    }
    if (diagonal) {
      basis = eig.vectors;
      s = std::move(s_try);
      t = std::move(t_try);
    }
  }
  if (basis.empty()) throw SingularityError("simultaneous diagonalization failed after 5 attempts");

  // Merge joint eigenvalues closer than the diagonalization tolerance; snap near-zero coordinates.
  struct Joint {
    double s, t, w1, w2, w;
  };
  std::vector<Joint> joints;
  auto snap = [&](double x) { return std::fabs(x) <= tol ? 0.0 : x; };
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double fu = dot(model.f, basis[k]);
    const double gu = dot(model.g, basis[k]);
    const double sk = snap(s[k]);
    const double tk = snap(t[k]);
    auto it = std::find_if(joints.begin(), joints.end(), [&](const Joint& j) {
      return std::fabs(j.s - sk) <= tol && std::fabs(j.t - tk) <= tol;
    });
    if (it == joints.end()) {
      joints.push_back({sk, tk, fu * fu, gu * gu, fu * gu});
    } else {
      it->w1 += fu * fu;
      it->w2 += gu * gu;
      it->w += fu * gu;
    }
  }
  constexpr double kDropWeight = 1e-12;
  std::vector<PlanarAtom<double>> a1, a2, a;
  for (const auto& j : joints) {
    if (j.w1 > kDropWeight) a1.push_back({j.s, j.t, j.w1});
    if (j.w2 > kDropWeight) a2.push_back({j.s, j.t, j.w2});
    if (std::fabs(j.w) > kDropWeight) a.push_back({j.s, j.t, j.w});
  }
  out.rho1 = DiscretePlanarMeasure<double>::from_atoms(std::move(a1));
  out.rho2 = DiscretePlanarMeasure<double>::from_atoms(std::move(a2));
  out.rho = DiscretePlanarMeasure<double>::from_atoms(std::move(a), true);
  return out;
}

}  // namespace bifree
