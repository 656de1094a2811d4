#include "ballq/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballq::exact {
namespace {

// Dense univariate polynomial over Q, coefficients by ascending degree.
using Poly = std::vector<Rational>;

void poly_trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Exact division q = a / b (remainder must vanish).
Poly poly_divide_exact(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
    if (a.empty()) break;
    if (a.size() < b.size()) {
      throw std::logic_error("inexact polynomial division");
    }
  }
  return q;
}

// N-th cyclotomic polynomial: (x^N - 1) / prod over proper divisors d of N.
Poly cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, Poly> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto build = [](auto&& self, unsigned m) -> const Poly& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    Poly numerator(m + 1, Rational(0));
    numerator[0] = Rational(-1);
    numerator[m] = Rational(1);
    for (unsigned d = 1; d < m; ++d) {
      if (m % d == 0) numerator = poly_divide_exact(std::move(numerator), self(self, d));
    }
    return cache.emplace(m, std::move(numerator)).first->second;
  };
  return build(build, n);
}

// Per-conductor reduction data: phi(N) and the representatives of z^e in the
// power basis for every exponent needed by products, conjugation and
// embedding (0 <= e < max(N, 2*phi(N) - 1)).
struct Tables {
  unsigned n = 1;
  unsigned phi = 1;
  std::vector<std::vector<Rational>> power;  // power[e] = coeffs of z^e
};

const Tables& tables_for(unsigned n) {
  static std::map<unsigned, Tables> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  Poly minimal = cyclotomic_polynomial(n);
  Tables t;
  t.n = n;
  t.phi = static_cast<unsigned>(minimal.size() - 1);
  unsigned needed = std::max(n, 2 * t.phi - 1);
  t.power.reserve(needed);
  for (unsigned e = 0; e < needed; ++e) {
    std::vector<Rational> row(t.phi, Rational(0));
    if (e < t.phi) {
      row[e] = Rational(1);
    } else {
      // z^e = z * z^{e-1}, then z^phi replaced by -(lower-degree part).
      const auto& prev = t.power[e - 1];
      Rational overflow = prev[t.phi - 1];
      for (unsigned i = t.phi - 1; i > 0; --i) row[i] = prev[i - 1];
      row[0] = Rational(0);
      if (!overflow.is_zero()) {
        for (unsigned i = 0; i < t.phi; ++i) {
          row[i] -= overflow * minimal[i];
        }
      }
    }
    t.power.push_back(std::move(row));
  }
  return cache.emplace(n, std::move(t)).first->second;
}

unsigned lcm_unsigned(unsigned a, unsigned b) {
  return a / std::gcd(a, b) * b;
}

// Reduces a raw coefficient list in powers z^0..z^{deg} into the power basis.
std::vector<Rational> reduce_raw(const Tables& t, std::vector<Rational> raw) {
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t e = 0; e < raw.size(); ++e) {
    if (raw[e].is_zero()) continue;
    if (e < t.phi) {
      out[e] += raw[e];
    } else {
      const auto& row = t.power[e];
      for (unsigned i = 0; i < t.phi; ++i) {
        if (!row[i].is_zero()) out[i] += raw[e] * row[i];
      }
    }
  }
  return out;
}

// Extended Euclid over Q[x]: returns u with u*f == gcd(f, g) modulo g.
// Both inputs nonzero; g is the modulus (the cyclotomic polynomial).
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational& lead = b.back();
  while (a.size() >= b.size()) {
    Rational c = a.back() / lead;
    size_t shift = a.size() - b.size();
    q[shift] = c;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    poly_trim(a);
  }
  poly_trim(q);
  return {std::move(q), std::move(a)};
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

}  // namespace

Cyclotomic::Cyclotomic() : conductor_(1), coefficients_(1, Rational(0)) {}

Cyclotomic::Cyclotomic(const Rational& value)
    : conductor_(1), coefficients_(1, value) {}

Cyclotomic Cyclotomic::constant(const Rational& value, unsigned conductor) {
  const Tables& t = tables_for(conductor);
  std::vector<Rational> coeffs(t.phi, Rational(0));
  coeffs[0] = value;
  return Cyclotomic(conductor, std::move(coeffs));
}

Cyclotomic Cyclotomic::zeta(unsigned conductor) {
  return zeta_power(conductor, 1);
}

Cyclotomic Cyclotomic::zeta_power(unsigned conductor, long k) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  const Tables& t = tables_for(conductor);
  long e = k % static_cast<long>(conductor);
  if (e < 0) e += conductor;
  return Cyclotomic(conductor, t.power[static_cast<size_t>(e)]);
}

Cyclotomic Cyclotomic::from_coefficients(unsigned conductor,
                                         std::vector<Rational> coefficients) {
  const Tables& t = tables_for(conductor);
  if (coefficients.size() != t.phi) {
    throw std::invalid_argument("coefficient vector size must equal phi(conductor)");
  }
  return Cyclotomic(conductor, std::move(coefficients));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coefficients_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool Cyclotomic::is_rational() const {
  for (size_t i = 1; i < coefficients_.size(); ++i) {
    if (!coefficients_[i].is_zero()) return false;
  }
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (!is_rational()) {
    throw std::domain_error("Cyclotomic::rational_value on irrational element " + str());
  }
  return coefficients_[0];
}

Cyclotomic Cyclotomic::embedded(unsigned conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor % conductor_ != 0) {
    throw std::invalid_argument("embedding requires conductor() | target");
  }
  const Tables& t = tables_for(conductor);
  unsigned step = conductor / conductor_;
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t e = 0; e < coefficients_.size(); ++e) {
    if (coefficients_[e].is_zero()) continue;
    const auto& row = t.power[e * step];
    for (unsigned i = 0; i < t.phi; ++i) {
      if (!row[i].is_zero()) out[i] += coefficients_[e] * row[i];
    }
  }
  return Cyclotomic(conductor, std::move(out));
}

Cyclotomic Cyclotomic::conj() const {
  const Tables& t = tables_for(conductor_);
  std::vector<Rational> out(t.phi, Rational(0));
  for (size_t e = 0; e < coefficients_.size(); ++e) {
    if (coefficients_[e].is_zero()) continue;
    size_t ce = e == 0 ? 0 : conductor_ - e;
    const auto& row = t.power[ce];
    for (unsigned i = 0; i < t.phi; ++i) {
      if (!row[i].is_zero()) out[i] += coefficients_[e] * row[i];
    }
  }
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) {
    Cyclotomic out = *this;
    out.coefficients_[0] = Rational(1) / coefficients_[0];
    return out;
  }
  Poly f = coefficients_;
  poly_trim(f);
  Poly modulus = cyclotomic_polynomial(conductor_);
  // Extended Euclid: maintain r = u*f (mod modulus).
  Poly r0 = modulus, r1 = f;
  Poly u0 = {}, u1 = {Rational(1)};
  while (!r1.empty() && r1.size() > 1) {
    auto [q, r2] = poly_divmod(r0, r1);
    Poly u2 = poly_sub(std::move(u0), poly_mul(q, u1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
  if (r1.empty()) {
    throw std::logic_error("cyclotomic inverse: unexpected common factor");
  }
  // r1 is a nonzero constant: inverse = u1 / r1, reduced.
  Rational scale = Rational(1) / r1[0];
  for (auto& c : u1) c *= scale;
  const Tables& t = tables_for(conductor_);
  return Cyclotomic(conductor_, reduce_raw(t, std::move(u1)));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  for (auto& c : out.coefficients_) c = -c;
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (conductor_ != o.conductor_) {
    unsigned n = lcm_unsigned(conductor_, o.conductor_);
    *this = embedded(n);
    return *this += o.embedded(n);
  }
  for (size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += o.coefficients_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) {
  if (conductor_ != o.conductor_) {
    unsigned n = lcm_unsigned(conductor_, o.conductor_);
    *this = embedded(n);
    return *this -= o.embedded(n);
  }
  for (size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= o.coefficients_[i];
  return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (conductor_ != o.conductor_) {
    unsigned n = lcm_unsigned(conductor_, o.conductor_);
    *this = embedded(n);
    return *this *= o.embedded(n);
  }
  const Tables& t = tables_for(conductor_);
  if (t.phi == 1) {
    coefficients_[0] *= o.coefficients_[0];
    return *this;
  }
  std::vector<Rational> raw(2 * t.phi - 1, Rational(0));
  for (size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i].is_zero()) continue;
    for (size_t j = 0; j < o.coefficients_.size(); ++j) {
      if (!o.coefficients_[j].is_zero()) raw[i + j] += coefficients_[i] * o.coefficients_[j];
    }
  }
  coefficients_ = reduce_raw(t, std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) {
  if (conductor_ != o.conductor_) {
    unsigned n = lcm_unsigned(conductor_, o.conductor_);
    *this = embedded(n);
    return *this /= o.embedded(n);
  }
  return *this *= o.inverse();
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coefficients_ == b.coefficients_;
  unsigned n = lcm_unsigned(a.conductor_, b.conductor_);
  return a.embedded(n).coefficients_ == b.embedded(n).coefficients_;
}

std::string Cyclotomic::str() const {
  if (is_rational()) return coefficients_[0].str();
  std::ostringstream os;
  bool first = true;
  for (size_t e = 0; e < coefficients_.size(); ++e) {
    const Rational& c = coefficients_[e];
    if (c.is_zero()) continue;
    if (!first) os << (c.sign() > 0 ? " + " : " - ");
    else if (c.sign() < 0) os << "-";
    first = false;
    Rational mag = c.sign() < 0 ? -c : c;
    if (e == 0) {
      os << mag.str();
    } else {
      if (!mag.is_one()) os << mag.str() << "*";
      os << "z" << conductor_;
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

void Cyclotomic::append_key(std::string& out) const {
  for (const auto& c : coefficients_) {
    out += c.str();
    out += ',';
  }
}

unsigned Cyclotomic::phi(unsigned n) {
  return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

}  // namespace ballq::exact
