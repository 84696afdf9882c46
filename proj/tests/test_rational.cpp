#include <doctest.h>

#include "generators.hpp"
#include "hyperluk/error.hpp"
#include "hyperluk/rational.hpp"

using namespace hyperluk;

TEST_CASE("rationals are normalized") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).to_string() == "1/2");
  CHECK(Rational(-3, -6).to_string() == "1/2");
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).is_integer());
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-1/3") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational::parse("6/8").to_string() == "3/4");
  CHECK_THROWS(Rational::parse("0.5"));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse(""));
  CHECK_THROWS(Rational::parse("1 /2"));
}

TEST_CASE("exact arithmetic") {
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK((-Rational(1, 3)).sign() == -1);
}

TEST_CASE("print then parse is the identity") {
  testgen::Gen g(11);
  for (int i = 0; i < 500; ++i) {
    Rational r = g.signed_rational(50, 7);
    CHECK(Rational::parse(r.to_string()) == r);
  }
}

TEST_CASE("field laws on random values") {
  testgen::Gen g(12);
  for (int i = 0; i < 300; ++i) {
    Rational a = g.signed_rational(9, 3), b = g.signed_rational(9, 3), c = g.signed_rational(9, 3);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (b.sign() != 0) CHECK((a / b) * b == a);
  }
}
