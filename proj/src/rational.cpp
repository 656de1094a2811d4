#include "ballq/rational.hpp"

#include <ostream>
#include <utility>

namespace ballq::exact {

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero();
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  value_.canonicalize();
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  mpq_class v;
  if (v.set_str(text, 10) != 0) {
    throw ParseError("malformed rational literal: '" + text + "'");
  }
  if (v.get_den() == 0) throw DivisionByZero();
  v.canonicalize();
  return Rational(std::move(v));
}

long Rational::to_long() const {
  if (!is_integer()) {
    throw std::domain_error("Rational::to_long on non-integer " + str());
  }
  if (!value_.get_num().fits_slong_p()) {
    throw std::overflow_error("Rational::to_long overflow on " + str());
  }
  return value_.get_num().get_si();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.str();
}

long gcd_long(long a, long b) {
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

}  // namespace ballq::exact
