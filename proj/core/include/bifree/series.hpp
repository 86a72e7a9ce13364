#pragma once

#include <vector>

#include "bifree/cumulants.hpp"
#include "bifree/scalar.hpp"

namespace bifree {

/// Truncated series sum c_{m,n} z^m w^n over 0 <= m + n <= D.
template <Scalar S>
class BivariateSeries : public TriangularTable<S> {
 public:
  BivariateSeries() = default;
  explicit BivariateSeries(int degree) : TriangularTable<S>(degree) {}
  static BivariateSeries constant(int degree, const S& value) {
    BivariateSeries out(degree);
    out(0, 0) = value;
    return out;
  }
};

/// Truncated series sum c_k x^k over 0 <= k <= D.
template <Scalar S>
class UnivariateSeries {
 public:
  UnivariateSeries() = default;
  explicit UnivariateSeries(int degree) : coeffs_(static_cast<std::size_t>(degree + 1), S{0}) {}
  explicit UnivariateSeries(std::vector<S> coeffs) : coeffs_(std::move(coeffs)) {}

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const S& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  S& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<S>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const UnivariateSeries&, const UnivariateSeries&) = default;

 private:
  std::vector<S> coeffs_;
};

template <Scalar S>
BivariateSeries<S> operator+(const BivariateSeries<S>& f, const BivariateSeries<S>& g);
template <Scalar S>
BivariateSeries<S> operator-(const BivariateSeries<S>& f, const BivariateSeries<S>& g);

/// Cauchy product truncated to total degree D. Throws DegreeError on unequal degrees.
template <Scalar S>
BivariateSeries<S> series_multiply(const BivariateSeries<S>& f, const BivariateSeries<S>& g);

/// g with f g = 1 to degree D. Throws SingularityError when f(0, 0) = 0.
template <Scalar S>
BivariateSeries<S> series_reciprocal(const BivariateSeries<S>& f);

template <Scalar S>
UnivariateSeries<S> series_multiply(const UnivariateSeries<S>& f, const UnivariateSeries<S>& g);
template <Scalar S>
UnivariateSeries<S> series_reciprocal(const UnivariateSeries<S>& f);

/// M(u(z), v(w)) truncated to the degree of M. Throws DomainError when u(0) or v(0) is
/// nonzero and DegreeError when u or v is shorter than M.
template <Scalar S>
BivariateSeries<S> series_compose_bi(const BivariateSeries<S>& outer, const UnivariateSeries<S>& u,
                                     const UnivariateSeries<S>& v);

/// R(z, w) = sum kappa_{m,n} z^m w^n with zero constant term.
template <Scalar S>
BivariateSeries<S> r_transform_series(const CumulantTable<S>& cumulants);

/// Moment series sum phi(a^m b^n) z^m w^n.
template <Scalar S>
BivariateSeries<S> moment_series(const MomentTable<S>& moments);

/// Both sides of
///   R(z, w) = 1 + z R_a(z) + w R_b(w) - zw / G(K_a(z), K_b(w))
/// as truncated series; returns the largest absolute coefficient difference up to total
/// degree D - 1. Throws DomainError unless M(0, 0) = 1 and DegreeError when D < 2.
template <Scalar S>
S verify_voiculescu_identity(const MomentTable<S>& moments);

}  // namespace bifree
