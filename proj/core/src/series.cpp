#include "bifree/series.hpp"

#include <algorithm>

namespace bifree {

namespace {

template <Scalar S>
void require_same_degree(const TriangularTable<S>& f, const TriangularTable<S>& g) {
  if (f.degree() != g.degree()) throw DegreeError("series degrees differ");
}

}  // namespace

template <Scalar S>
BivariateSeries<S> operator+(const BivariateSeries<S>& f, const BivariateSeries<S>& g) {
  require_same_degree(f, g);
  BivariateSeries<S> out(f.degree());
  for (int t = 0; t <= f.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = f(m, t - m) + g(m, t - m);
  return out;
}

template <Scalar S>
BivariateSeries<S> operator-(const BivariateSeries<S>& f, const BivariateSeries<S>& g) {
  require_same_degree(f, g);
  BivariateSeries<S> out(f.degree());
  for (int t = 0; t <= f.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = f(m, t - m) - g(m, t - m);
  return out;
}

template <Scalar S>
BivariateSeries<S> series_multiply(const BivariateSeries<S>& f, const BivariateSeries<S>& g) {
  require_same_degree(f, g);
  const int d = f.degree();
  BivariateSeries<S> out(d);
  for (int t1 = 0; t1 <= d; ++t1)
    for (int m1 = 0; m1 <= t1; ++m1) {
      const S& x = f(m1, t1 - m1);
      if (is_zero(x)) continue;
      for (int t2 = 0; t1 + t2 <= d; ++t2)
        for (int m2 = 0; m2 <= t2; ++m2) out(m1 + m2, t1 + t2 - m1 - m2) += x * g(m2, t2 - m2);
    }
  return out;
}

template <Scalar S>
BivariateSeries<S> series_reciprocal(const BivariateSeries<S>& f) {
  const S& c = f(0, 0);
  if (is_zero(c)) throw SingularityError("series with zero constant term has no reciprocal");
  const int d = f.degree();
  BivariateSeries<S> out(d);
  out(0, 0) = S{1} / c;
  // Coefficients in order of total degree: g_{m,n} = -(1/c) sum_{(i,j) != 0} f_{i,j} g_{m-i,n-j}.
  for (int t = 1; t <= d; ++t)
    for (int m = t; m >= 0; --m) {
      const int n = t - m;
      S acc{0};
      for (int i = 0; i <= m; ++i)
        for (int j = 0; j <= n; ++j)
          if (i + j > 0) acc += f(i, j) * out(m - i, n - j);
      out(m, n) = -acc / c;
    }
  return out;
}

template <Scalar S>
UnivariateSeries<S> series_multiply(const UnivariateSeries<S>& f, const UnivariateSeries<S>& g) {
  if (f.degree() != g.degree()) throw DegreeError("series degrees differ");
  const int d = f.degree();
  UnivariateSeries<S> out(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; i + j <= d; ++j) out[i + j] += f[i] * g[j];
  return out;
}

template <Scalar S>
UnivariateSeries<S> series_reciprocal(const UnivariateSeries<S>& f) {
  if (is_zero(f[0])) throw SingularityError("series with zero constant term has no reciprocal");
  const int d = f.degree();
  UnivariateSeries<S> out(d);
  out[0] = S{1} / f[0];
  for (int k = 1; k <= d; ++k) {
    S acc{0};
    for (int i = 1; i <= k; ++i) acc += f[i] * out[k - i];
    out[k] = -acc / f[0];
  }
  return out;
}

template <Scalar S>
BivariateSeries<S> series_compose_bi(const BivariateSeries<S>& outer, const UnivariateSeries<S>& u,
                                     const UnivariateSeries<S>& v) {
  const int d = outer.degree();
  if (!is_zero(u[0]) || !is_zero(v[0])) throw DomainError("substituted series must vanish at 0");
  if (u.degree() < d || v.degree() < d) throw DegreeError("substituted series shorter than the outer series");
  auto truncate = [d](const UnivariateSeries<S>& s) {
    return UnivariateSeries<S>(std::vector<S>(s.coeffs().begin(), s.coeffs().begin() + d + 1));
  };
  const auto ut = truncate(u);
  const auto vt = truncate(v);
  std::vector<UnivariateSeries<S>> upow{UnivariateSeries<S>(d)}, vpow{UnivariateSeries<S>(d)};
  upow[0][0] = S{1};
  vpow[0][0] = S{1};
  for (int k = 1; k <= d; ++k) {
    upow.push_back(series_multiply(upow.back(), ut));
    vpow.push_back(series_multiply(vpow.back(), vt));
  }
  BivariateSeries<S> out(d);
  for (int t = 0; t <= d; ++t)
    for (int m = t; m >= 0; --m) {
      const int n = t - m;
      const S& c = outer(m, n);
      if (is_zero(c)) continue;
      // u^m starts at z^m and v^n at w^n, so only i >= m, j >= n contribute.
      for (int i = m; i <= d; ++i) {
        if (is_zero(upow[static_cast<std::size_t>(m)][i])) continue;
        const S ci = c * upow[static_cast<std::size_t>(m)][i];
        for (int j = n; i + j <= d; ++j) out(i, j) += ci * vpow[static_cast<std::size_t>(n)][j];
      }
    }
  return out;
}

template <Scalar S>
BivariateSeries<S> r_transform_series(const CumulantTable<S>& cumulants) {
  BivariateSeries<S> out(cumulants.degree());
  for (int t = 1; t <= cumulants.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = cumulants(m, t - m);
  return out;
}

template <Scalar S>
BivariateSeries<S> moment_series(const MomentTable<S>& moments) {
  BivariateSeries<S> out(moments.degree());
  for (int t = 0; t <= moments.degree(); ++t)
    for (int m = t; m >= 0; --m) out(m, t - m) = moments(m, t - m);
  return out;
}

template <Scalar S>
S verify_voiculescu_identity(const MomentTable<S>& moments) {
  const int d = moments.degree();
  if (d < 2) throw DegreeError("voiculescu identity needs degree >= 2");
  if (moments(0, 0) != S{1}) throw DomainError("moment table must have M(0,0) = 1");
  const auto cumulants = moments_to_cumulants(moments);
  const auto lhs = r_transform_series(cumulants);

  // A(z) = 1 + z R_a(z), B(w) = 1 + w R_b(w); u = z / A(z) = 1 / K_a(z).
  UnivariateSeries<S> a_side(d), b_side(d);
  a_side[0] = S{1};
  b_side[0] = S{1};
  for (int k = 1; k <= d; ++k) {
    a_side[k] = cumulants(k, 0);
    b_side[k] = cumulants(0, k);
  }
  auto shift_up = [d](const UnivariateSeries<S>& s) {
    UnivariateSeries<S> out(d);
    for (int k = 1; k <= d; ++k) out[k] = s[k - 1];
    return out;
  };
  const auto u = shift_up(series_reciprocal(a_side));
  const auto v = shift_up(series_reciprocal(b_side));

  BivariateSeries<S> product(d);
  for (int m = 0; m <= d; ++m)
    for (int n = 0; m + n <= d; ++n) product(m, n) = a_side[m] * b_side[n];
  const auto composed = series_compose_bi(moment_series(moments), u, v);
  const auto quotient = series_multiply(product, series_reciprocal(composed));

  BivariateSeries<S> rhs(d);
  rhs(0, 0) = S{1};
  for (int k = 1; k <= d; ++k) {
    rhs(k, 0) += a_side[k];
    rhs(0, k) += b_side[k];
  }
  rhs = rhs - quotient;

  S worst{0};
  for (int t = 0; t < d; ++t)
    for (int m = t; m >= 0; --m) worst = std::max(worst, abs_value(lhs(m, t - m) - rhs(m, t - m)));
  return worst;
}

#define BIFREE_INSTANTIATE(S)                                                                          \
  template BivariateSeries<S> operator+(const BivariateSeries<S>&, const BivariateSeries<S>&);         \
  template BivariateSeries<S> operator-(const BivariateSeries<S>&, const BivariateSeries<S>&);         \
  template BivariateSeries<S> series_multiply(const BivariateSeries<S>&, const BivariateSeries<S>&);   \
  template BivariateSeries<S> series_reciprocal(const BivariateSeries<S>&);                            \
  template UnivariateSeries<S> series_multiply(const UnivariateSeries<S>&, const UnivariateSeries<S>&); \
  template UnivariateSeries<S> series_reciprocal(const UnivariateSeries<S>&);                          \
  template BivariateSeries<S> series_compose_bi(const BivariateSeries<S>&, const UnivariateSeries<S>&, \
                                                const UnivariateSeries<S>&);                           \
  template BivariateSeries<S> r_transform_series(const CumulantTable<S>&);                             \
  template BivariateSeries<S> moment_series(const MomentTable<S>&);                                    \
  template S verify_voiculescu_identity(const MomentTable<S>&);

BIFREE_INSTANTIATE(Rational)
BIFREE_INSTANTIATE(double)

#undef BIFREE_INSTANTIATE

}  // namespace bifree
