#include "bifree/scalar.hpp"

#include <cctype>
#include <cmath>

#include "bifree/error.hpp"

namespace bifree {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational pow10(long exponent) {
  Rational r{1};
  for (long i = 0; i < exponent; ++i) r *= 10;
  return r;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw ParseError("malformed exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac_part = s.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty()))
      throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational value{boost::multiprecision::mpz_int(digits)};
  if (exponent >= 0)
    value *= pow10(exponent);
  else
    value /= pow10(-exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

std::string_view to_string(ScalarKind kind) {
  return kind == ScalarKind::rational ? "rational" : "float";
}

ScalarKind parse_scalar_kind(std::string_view text) {
  if (text == "rational") return ScalarKind::rational;
  if (text == "float") return ScalarKind::floating;
  throw ParseError("unknown scalar kind '" + std::string(text) + "' (expected rational|float)");
}

template <>
Rational scalar_cast<Rational>(double x) {
  if (!std::isfinite(x)) throw DomainError("cannot convert a non-finite double to a rational");
  return Rational(x);
}

Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::string_view s = trim(text);
  if (s.empty()) throw ParseError("empty rational literal");
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(trim(s.substr(0, slash)));
    Rational den = parse_decimal(trim(s.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(s);
}

std::string format_rational(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) return std::nullopt;
  using boost::multiprecision::mpz_int;
  const mpz_int num = boost::multiprecision::numerator(x);
  const mpz_int den = boost::multiprecision::denominator(x);
  const mpz_int rn = boost::multiprecision::sqrt(num);
  const mpz_int rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace bifree
