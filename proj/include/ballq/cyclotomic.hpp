#pragma once

#include <string>
#include <vector>

#include "ballq/rational.hpp"

namespace ballq::exact {

/// Element of the cyclotomic field Q(zeta_N), stored as a dense coefficient
/// vector over the power basis 1, z, ..., z^{phi(N)-1} modulo the N-th
/// cyclotomic polynomial (z = e^{2*pi*i/N}).  The representation is canonical
/// for a fixed conductor, so same-conductor equality is coefficient-wise;
/// mixed conductors compare after lossless embedding into the lcm.
class Cyclotomic {
public:
  /// Zero of conductor 1 (a plain rational).
  Cyclotomic();
  /// Rational constant of conductor 1.
  Cyclotomic(const Rational& value);  // NOLINT: implicit by design
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}  // NOLINT

  /// Rational constant carried at the given conductor.
  static Cyclotomic constant(const Rational& value, unsigned conductor);
  /// The primitive root zeta_N.
  static Cyclotomic zeta(unsigned conductor);
  /// zeta_N^k for any integer k (reduced representative).
  static Cyclotomic zeta_power(unsigned conductor, long k);
  /// Element with the given power-basis coefficients (size phi(conductor)).
  static Cyclotomic from_coefficients(unsigned conductor,
                                      std::vector<Rational> coefficients);

  unsigned conductor() const { return conductor_; }
  /// Power-basis coefficients, length phi(conductor()).
  const std::vector<Rational>& coefficients() const { return coefficients_; }

  bool is_zero() const;
  bool is_one() const { return is_rational() && coefficients_[0].is_one(); }
  /// True when the element lies in Q (all non-constant coefficients vanish).
  bool is_rational() const;
  /// The rational value; requires is_rational().
  Rational rational_value() const;

  /// Lossless embedding into a larger field; `conductor` must be a multiple
  /// of conductor().
  Cyclotomic embedded(unsigned conductor) const;
  /// Complex conjugate (z -> z^{-1}).
  Cyclotomic conj() const;
  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclotomic inverse() const;

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) {
    return !(a == b);
  }

  /// Human-readable form, e.g. "1/2 - 1/2*z5^3".
  std::string str() const;
  /// Appends a compact canonical key (used for hashing matrices).
  void append_key(std::string& out) const;

  /// Euler's totient (exposed for tests and table sizing).
  static unsigned phi(unsigned n);

private:
  Cyclotomic(unsigned conductor, std::vector<Rational> coefficients)
      : conductor_(conductor), coefficients_(std::move(coefficients)) {}

  unsigned conductor_;
  std::vector<Rational> coefficients_;
};

}  // namespace ballq::exact
