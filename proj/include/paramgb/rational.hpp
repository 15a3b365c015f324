#pragma once

// Exact integer and rational arithmetic. Values are always kept in canonical
// form: rationals are reduced with a positive denominator, zero is 0/1.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace paramgb {

class Integer {
 public:
  Integer() = default;
  Integer(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  /// Parses an optionally signed decimal literal. Throws std::invalid_argument.
  static Integer parse(std::string_view text);

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const { return value_.get_si(); }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const { return value_.get_str(); }
  const mpz_class& raw() const { return value_; }

  Integer operator-() const { return Integer(mpz_class(-value_)); }
  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  /// Truncating quotient. Throws std::domain_error on a zero divisor.
  friend Integer operator/(const Integer& a, const Integer& b);
  friend Integer operator%(const Integer& a, const Integer& b);

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  mpz_class value_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);
Integer abs(const Integer& a);
std::ostream& operator<<(std::ostream& os, const Integer& v);

class Rational {
 public:
  Rational() = default;
  Rational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : value_(v.raw()) {}  // NOLINT(google-explicit-constructor)

  /// Builds n/d in lowest terms. Throws std::domain_error("division by zero") when d = 0.
  static Rational normalize(const Integer& n, const Integer& d);

  /// Parses the text form `-p/q` (the `/q` part optional).
  static Rational parse(std::string_view text);

  Integer numerator() const { return Integer(mpz_class(value_.get_num())); }
  Integer denominator() const { return Integer(mpz_class(value_.get_den())); }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  Rational operator-() const;
  /// Multiplicative inverse. Throws std::domain_error for zero.
  Rational inv() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& v);

}  // namespace paramgb
