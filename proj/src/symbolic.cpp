#include "ballq/symbolic.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ballq::symbolic {

using exact::DivisionByZero;
using exact::ParseError;

MultiPoly MultiPoly::constant(const Rational& value) {
  MultiPoly p;
  p.insert({0, 0, 0}, value);
  return p;
}

MultiPoly MultiPoly::atom(Atom a) {
  MultiPoly p;
  Exponents e{0, 0, 0};
  e[a] = 1;
  p.insert(e, Rational(1));
  return p;
}

bool MultiPoly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0, 0};
}

Rational MultiPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant())
    throw std::logic_error("constant_value on non-constant polynomial");
  return terms_.begin()->second;
}

void MultiPoly::insert(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  for (const auto& [e, c] : o.terms_) insert(e, -c);
  return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  MultiPoly out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e{ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]};
      out.insert(e, ca * cb);
    }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly out = constant(1);
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

Rational MultiPoly::evaluate(const std::array<Rational, 3>& values) const {
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (size_t a = 0; a < 3; ++a)
      for (unsigned i = 0; i < e[a]; ++i) term *= values[a];
    total += term;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  static const char* names[3] = {"p1", "p2", "g"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    bool printed = false;
    if (!(c.is_one() && (e[0] || e[1] || e[2]))) {
      os << c.str();
      printed = true;
    }
    for (size_t a = 0; a < 3; ++a) {
      if (!e[a]) continue;
      if (printed) os << '*';
      os << names[a];
      if (e[a] > 1) os << '^' << e[a];
      printed = true;
    }
  }
  return os.str();
}

RatFunc::RatFunc(MultiPoly num, MultiPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num_.is_zero()) den_ = MultiPoly::constant(1);
}

RatFunc RatFunc::constant(const Rational& value) {
  return RatFunc(MultiPoly::constant(value), MultiPoly::constant(1));
}

RatFunc RatFunc::atom(Atom a) {
  return RatFunc(MultiPoly::atom(a), MultiPoly::constant(1));
}

RatFunc RatFunc::operator+(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const {
  return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator*(const RatFunc& o) const {
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  if (o.num_.is_zero()) throw DivisionByZero("division by zero rational function");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::pow(unsigned e) const {
  return RatFunc(num_.pow(e), den_.pow(e));
}

Rational RatFunc::evaluate_at(const std::array<Rational, 3>& values) const {
  const Rational d = den_.evaluate(values);
  if (d.is_zero()) throw DivisionByZero("formula denominator vanishes");
  return num_.evaluate(values) / d;
}

Rational RatFunc::evaluate(long p1, long p2) const {
  const long g = std::gcd(p1, 3L);
  return evaluate_at({Rational(p1), Rational(p2), Rational(g)});
}

std::string RatFunc::str() const {
  if (den_ == MultiPoly::constant(1)) return num_.str();
  return "(" + num_.str() + ") / (" + den_.str() + ")";
}

namespace {

// Recursive-descent parser over a flat character view.
class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  RatFunc run() {
    RatFunc value = expression();
    skip_space();
    if (pos_ != text_.size())
      throw ParseError("unexpected trailing input in formula: " + text_);
    return value;
  }

private:
  RatFunc expression() {
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      ++pos_;
      negate = true;
    }
    RatFunc value = term();
    if (negate) value = -value;
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '+') {
        ++pos_;
        value = value + term();
      } else if (c == '-') {
        ++pos_;
        value = value - term();
      } else {
        return value;
      }
    }
  }

  RatFunc term() {
    RatFunc value = factor();
    while (true) {
      skip_space();
      const char c = peek();
      if (c == '*') {
        ++pos_;
        value = value * factor();
      } else if (c == '/') {
        ++pos_;
        value = value / factor();
      } else {
        return value;
      }
    }
  }

  RatFunc factor() {
    RatFunc value = base();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      if (!std::isdigit(peek()))
        throw ParseError("exponent must be a nonnegative integer");
      value = value.pow(static_cast<unsigned>(integer()));
    }
    return value;
  }

  RatFunc base() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      ++pos_;
      RatFunc value = expression();
      expect(')');
      return value;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(c)) return RatFunc::constant(Rational(integer()));
    if (std::isalpha(c)) return identifier();
    throw ParseError(std::string("unexpected character '") + c + "' in formula");
  }

  RatFunc identifier() {
    const size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_]))))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "p" || name == "p1") return RatFunc::atom(kP1);
    if (name == "p2") return RatFunc::atom(kP2);
    if (name == "nu" || name == "nu1") return nu_of(kP1);
    if (name == "nu2") return nu_of(kP2);
    if (name == "gcd") {
      expect('(');
      skip_space();
      const size_t astart = pos_;
      while (pos_ < text_.size() &&
             std::isalnum(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      const std::string arg = text_.substr(astart, pos_ - astart);
      if (arg != "p" && arg != "p1")
        throw ParseError("gcd() supports only gcd(p,3)");
      expect(',');
      skip_space();
      if (peek() != '3') throw ParseError("gcd() supports only gcd(p,3)");
      ++pos_;
      expect(')');
      return RatFunc::atom(kG);
    }
    throw ParseError("unknown symbol '" + name + "' in formula");
  }

  static RatFunc nu_of(Atom a) {
    const RatFunc p = RatFunc::atom(a);
    return (p - RatFunc::constant(2)) / p;
  }

  long integer() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    try {
      return std::stol(text_.substr(start, pos_ - start));
    } catch (const std::exception&) {
      throw ParseError("integer literal out of range");
    }
  }

  void expect(char c) {
    skip_space();
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "' in formula: " + text_);
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace

RatFunc parse_formula(const std::string& text) { return Parser(text).run(); }

}  // namespace ballq::symbolic
