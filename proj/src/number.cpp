#include "prc/number.hpp"

#include "prc/errors.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

namespace prc {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Boost reads a leading 0 as an octal prefix, so strip leading zeros first.
Integer decimal_integer(std::string_view digits) {
  while (digits.size() > 1 && digits.front() == '0') digits.remove_prefix(1);
  return Integer(std::string(digits));
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw InputError("malformed integer '" + std::string(s) + "'");
  Integer v = decimal_integer(s);
  return negative ? Integer(-v) : v;
}

// Exact value of a decimal literal such as "-1.25e-3".
Rational parse_decimal_exact(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    auto [p, ec] = std::from_chars(exp_text.data() + (exp_text.starts_with('+') ? 1 : 0),
                                   exp_text.data() + exp_text.size(), exponent);
    if (ec != std::errc() || p != exp_text.data() + exp_text.size())
      throw InputError("malformed number '" + std::string(text) + "'");
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
    exponent -= static_cast<long long>(s.size() - dot - 1);
  } else {
    digits = std::string(s);
  }
  if (!all_digits(digits)) throw InputError("malformed number '" + std::string(text) + "'");
  Rational r{decimal_integer(digits)};
  Integer ten_pow = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(std::llabs(exponent)));
  r = exponent >= 0 ? Rational(r * ten_pow) : Rational(r / ten_pow);
  return negative ? Rational(-r) : r;
}

}  // namespace

std::string format_double(double d) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, d);
  return std::string(buf, p);
}

Rational Number::decimal_rational(double d) {
  if (!std::isfinite(d)) throw DomainError("non-finite value has no rational form");
  return parse_decimal_exact(format_double(d));
}

Number Number::parse(std::string_view text, bool exact_decimals) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InputError("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!all_digits(den_text)) throw InputError("malformed rational '" + std::string(text) + "'");
    Integer den = decimal_integer(den_text);
    if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  std::string_view body = text;
  if (body.front() == '-' || body.front() == '+') body.remove_prefix(1);
  if (all_digits(body)) return Rational(parse_integer(text));
  if (exact_decimals) return parse_decimal_exact(text);
  double d = 0;
  auto [p, ec] = std::from_chars(text.data() + (text.front() == '+' ? 1 : 0), text.data() + text.size(), d);
  if (ec != std::errc() || p != text.data() + text.size())
    throw InputError("malformed number '" + std::string(text) + "'");
  return d;
}

const Rational& Number::exact() const {
  if (!is_exact()) throw DomainError("value " + to_string() + " is not exact");
  return std::get<Rational>(value_);
}

double Number::to_double() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<double>(value_);
}

Rational Number::to_rational() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return *r;
  return decimal_rational(std::get<double>(value_));
}

int Number::sign() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return r->sign();
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

bool Number::near_zero(double tol) const {
  if (is_exact()) return is_zero();
  return std::abs(std::get<double>(value_)) <= tol;
}

std::string Number::to_string() const {
  if (const auto* r = std::get_if<Rational>(&value_)) {
    const Integer& den = boost::multiprecision::denominator(*r);
    std::string out = boost::multiprecision::numerator(*r).str();
    if (den != 1) out += "/" + den.str();
    return out;
  }
  return format_double(std::get<double>(value_));
}

Number Number::operator-() const {
  if (const auto* r = std::get_if<Rational>(&value_)) return Rational(-*r);
  return -std::get<double>(value_);
}

#define PRC_NUMBER_COMPOUND(op)                                                \
  Number& Number::operator op##=(const Number& o) {                            \
    if (is_exact() && o.is_exact()) {                                          \
      std::get<Rational>(value_) op## = std::get<Rational>(o.value_);          \
    } else {                                                                   \
      value_ = to_double() op o.to_double();                                   \
    }                                                                          \
    return *this;                                                              \
  }

PRC_NUMBER_COMPOUND(+)
PRC_NUMBER_COMPOUND(-)
PRC_NUMBER_COMPOUND(*)

#undef PRC_NUMBER_COMPOUND

Number& Number::operator/=(const Number& o) {
  if (o.is_exact() && o.is_zero()) throw DomainError("division by exact zero");
  if (is_exact() && o.is_exact()) {
    std::get<Rational>(value_) /= std::get<Rational>(o.value_);
  } else {
    value_ = to_double() / o.to_double();
  }
  return *this;
}

bool operator==(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Number& a, const Number& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x < y) return std::partial_ordering::less;
    if (y < x) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

Number abs(const Number& x) { return x.sign() < 0 ? -x : x; }
Number min(const Number& a, const Number& b) { return b < a ? b : a; }
Number max(const Number& a, const Number& b) { return a < b ? b : a; }

}  // namespace prc
