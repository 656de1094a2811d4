#pragma once

#include <array>
#include <map>
#include <string>

#include "ballq/rational.hpp"

namespace ballq::symbolic {

using exact::Rational;

/// Polynomial atoms: the two weight parameters and g = gcd(p, 3), kept as a
/// free symbol so formulas using it stay exact identities.
enum Atom : size_t { kP1 = 0, kP2 = 1, kG = 2 };

/// Sparse polynomial over the rationals in the three atoms.
class MultiPoly {
public:
  using Exponents = std::array<unsigned, 3>;

  MultiPoly() = default;
  static MultiPoly constant(const Rational& value);
  static MultiPoly atom(Atom a);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the whole value when is_constant()).
  Rational constant_value() const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) {
    return !(a == b);
  }

  Rational evaluate(const std::array<Rational, 3>& values) const;
  std::string str() const;

private:
  void insert(const Exponents& e, const Rational& c);
  // Monomial exponents -> nonzero coefficient.
  std::map<Exponents, Rational> terms_;
};

/// Quotient of two polynomials.  Not reduced to lowest terms; equality is
/// decided by cross-multiplication, which is exact and cheap at this size.
class RatFunc {
public:
  RatFunc() : num_(), den_(MultiPoly::constant(1)) {}
  RatFunc(MultiPoly num, MultiPoly den);
  static RatFunc constant(const Rational& value);
  static RatFunc atom(Atom a);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  RatFunc operator/(const RatFunc& o) const;
  RatFunc operator-() const;
  RatFunc pow(unsigned e) const;

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) {
    return !(a == b);
  }

  /// Substitute p1, p2 and g = gcd(p1, 3).  Throws DivisionByZero when the
  /// denominator vanishes at the point.
  Rational evaluate(long p1, long p2) const;
  Rational evaluate_at(const std::array<Rational, 3>& values) const;

  std::string str() const;

private:
  MultiPoly num_, den_;
};

/// Parse a weight formula.  Grammar: integers, the atoms `p` (alias of `p1`),
/// `p1`, `p2`, `gcd(p,3)`, the shorthands `nu`/`nu1`/`nu2` for (p_k-2)/p_k,
/// the operators + - * / ^ and parentheses.  Multiplication is always
/// explicit.  Throws exact::ParseError on malformed input.
RatFunc parse_formula(const std::string& text);

}  // namespace ballq::symbolic
