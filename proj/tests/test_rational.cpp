#include <doctest.h>

#include <random>
#include <sstream>

#include "ballq/rational.hpp"

using ballq::exact::DivisionByZero;
using ballq::exact::ParseError;
using ballq::exact::Rational;

TEST_CASE("rational arithmetic stays canonical") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2) * (Rational(1) - Rational(2, 5)) == Rational(6, 5));
  CHECK(Rational(-33, 8) / (Rational(16) * Rational(120)) ==
        Rational(-11, 5120));

  // Negative denominators normalize on construction.
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).denominator() == 2);
  CHECK(Rational(-4, -8) == Rational(1, 2));
}

TEST_CASE("rational comparisons and predicates") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-5) < Rational(0));
  CHECK(Rational(7, 7).is_one());
  CHECK(Rational(0, 5).is_zero());
  CHECK(Rational(6, 3).is_integer());
  CHECK_FALSE(Rational(2, 3).is_integer());
  CHECK(Rational(-3, 4).sign() == -1);
  CHECK(Rational(0).sign() == 0);
  CHECK(Rational(12, 4).to_long() == 3);
  CHECK_THROWS_AS((void)Rational(1, 2).to_long(), std::domain_error);
}

TEST_CASE("rational parsing and formatting round-trip") {
  CHECK(Rational::parse("22/7") == Rational(22, 7));
  CHECK(Rational::parse("-11/5120").str() == "-11/5120");
  CHECK(Rational::parse("42").str() == "42");
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("banana"), ParseError);
  CHECK_THROWS_AS(Rational::parse(""), ParseError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);

  std::mt19937 rng(20260815);
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 500);
  for (int i = 0; i < 200; ++i) {
    const Rational q(num(rng), den(rng));
    CHECK(Rational::parse(q.str()) == q);
  }
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> num(-60, 60);
  std::uniform_int_distribution<long> den(1, 40);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 150; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + Rational(0) == a);
    CHECK(a * Rational(1) == a);
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
  }
}

TEST_CASE("rational stream output") {
  std::ostringstream os;
  os << Rational(-17, 6000);
  CHECK(os.str() == "-17/6000");
}
