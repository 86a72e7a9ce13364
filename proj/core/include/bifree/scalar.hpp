#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bifree {

/// Exact rational scalar. Expression templates are off so `auto` is safe.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

enum class ScalarKind { rational, floating };

std::string_view to_string(ScalarKind kind);
ScalarKind parse_scalar_kind(std::string_view text);

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
  static constexpr ScalarKind kind = ScalarKind::rational;
  static constexpr bool exact = true;
};

template <>
struct ScalarTraits<double> {
  static constexpr ScalarKind kind = ScalarKind::floating;
  static constexpr bool exact = false;
};

template <class S>
concept Scalar = requires { ScalarTraits<S>::kind; };

inline double to_double(const Rational& x) { return x.convert_to<double>(); }
inline double to_double(double x) { return x; }

inline Rational abs_value(const Rational& x) { return boost::multiprecision::abs(x); }
inline double abs_value(double x) { return std::fabs(x); }

/// Converts between scalar kinds; double -> Rational is binary-exact.
template <class To>
To scalar_cast(const Rational& x);
template <class To>
To scalar_cast(double x);

template <>
inline Rational scalar_cast<Rational>(const Rational& x) { return x; }
template <>
inline double scalar_cast<double>(const Rational& x) { return to_double(x); }
template <>
inline double scalar_cast<double>(double x) { return x; }
template <>
Rational scalar_cast<Rational>(double x);

/// Parses "p/q", "p", or a decimal literal such as "-0.25" or "1e-3" exactly.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" rendering; the denominator is always written.
std::string format_rational(const Rational& x);

/// Exact square root when both numerator and denominator are perfect squares.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Equality up to an absolute-or-relative tolerance for doubles, exact for rationals.
inline bool nearly_equal(const Rational& a, const Rational& b, double /*tol*/) { return a == b; }
inline bool nearly_equal(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::fmax(1.0, std::fmax(std::fabs(a), std::fabs(b)));
}

inline bool is_zero(const Rational& x, double /*tol*/ = 0.0) { return x == 0; }
inline bool is_zero(double x, double tol = 0.0) { return std::fabs(x) <= tol; }

template <class S>
S pow_int(const S& base, int exponent) {
  S result{1};
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace bifree
