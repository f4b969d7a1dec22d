#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace prc {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

/// A real number that is either an exact rational or a double.
///
/// Arithmetic between two exact operands stays exact; as soon as one operand
/// is a double the result is a double. Structural computations (Casimir
/// identity, lattice, eta) run in this type so that models given with
/// rational constants produce exact answers.
class Number {
 public:
  Number() : value_(Rational(0)) {}
  Number(Rational r) : value_(std::move(r)) {}  // NOLINT(implicit)
  Number(double d) : value_(d) {}                // NOLINT(implicit)
  Number(int i) : value_(Rational(i)) {}         // NOLINT(implicit)
  Number(long long i) : value_(Rational(i)) {}   // NOLINT(implicit)

  /// Parses "p", "p/q" or a decimal literal. Integers and fractions are
  /// exact; decimals are exact only when `exact_decimals` is set.
  static Number parse(std::string_view text, bool exact_decimals = false);

  /// Exact rational with the value of the shortest decimal that round-trips
  /// to `d` (so 0.1 becomes 1/10, not the binary expansion).
  static Rational decimal_rational(double d);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;
  double to_double() const;
  /// Exact value; doubles convert through their shortest decimal form.
  Rational to_rational() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  /// Zero test: exact for rationals, |v| <= tol for doubles.
  bool near_zero(double tol) const;

  /// "p" or "p/q" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

  Number operator-() const;
  Number& operator+=(const Number& o);
  Number& operator-=(const Number& o);
  Number& operator*=(const Number& o);
  Number& operator/=(const Number& o);

  friend Number operator+(Number a, const Number& b) { return a += b; }
  friend Number operator-(Number a, const Number& b) { return a -= b; }
  friend Number operator*(Number a, const Number& b) { return a *= b; }
  friend Number operator/(Number a, const Number& b) { return a /= b; }

  friend bool operator==(const Number& a, const Number& b);
  friend std::partial_ordering operator<=>(const Number& a, const Number& b);

 private:
  std::variant<Rational, double> value_;
};

Number abs(const Number& x);
Number min(const Number& a, const Number& b);
Number max(const Number& a, const Number& b);

std::string format_double(double d);

/// Conversion used by the templated numeric kernels.
template <class Real>
Real as(const Number& n);

template <>
inline double as<double>(const Number& n) {
  return n.to_double();
}

template <>
inline Rational as<Rational>(const Number& n) {
  return n.to_rational();
}

}  // namespace prc
