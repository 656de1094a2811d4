#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ballq::exact {

/// Thrown on division by zero in any exact-arithmetic type.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("exact arithmetic: division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

/// Thrown when a textual value cannot be parsed into an exact type.
class ParseError : public std::invalid_argument {
public:
  explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Arbitrary-precision rational number.  Always stored in lowest terms with a
/// positive denominator, so equality is plain value comparison.  Immutable in
/// spirit: all operators return fresh values and never round.
class Rational {
public:
  Rational() : value_(0) {}
  Rational(long numerator) : value_(numerator) {}  // NOLINT: implicit by design
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "n" or "n/d" with optional sign.  Throws ParseError on malformed
  /// input and DivisionByZero on a zero denominator.
  static Rational parse(const std::string& text);

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// Numerator/denominator as arbitrary-precision integers.
  const mpz_class& numerator() const { return value_.get_num(); }
  const mpz_class& denominator() const { return value_.get_den(); }

  /// Exact conversion to long; requires an integer value that fits.
  long to_long() const;
  /// Nearest double (display only; the engine never computes with floats).
  double to_double() const { return value_.get_d(); }

  /// Serializes as "n" or "n/d"; parse(str()) round-trips losslessly.
  std::string str() const { return value_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) > 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) >= 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
  mpq_class value_;
};

/// gcd for small non-negative integers (weight bookkeeping).
long gcd_long(long a, long b);

}  // namespace ballq::exact
