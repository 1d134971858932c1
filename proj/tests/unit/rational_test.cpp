#include "doctest.h"
#include "orbistab/rational.hpp"

#include <random>

using namespace orbistab;

TEST_SUITE("rational") {

TEST_CASE("lowest terms with positive denominator") {
  const Rational r(6, -4);
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(Rational(0, 7).denominator() == 1);
  CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("arithmetic") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("floor and ceil") {
  CHECK(Rational(-3, 2).floor() == -2);
  CHECK(Rational(-3, 2).ceil() == -1);
  CHECK(Rational(7, 2).floor() == 3);
  CHECK(Rational(4).floor() == 4);
}

TEST_CASE("parse and print") {
  CHECK(Rational::parse("3/4") == Rational(3, 4));
  CHECK(Rational::parse("-6/4") == Rational(-3, 2));
  CHECK(Rational::parse("17") == Rational(17));
  CHECK(Rational(3, 4).str() == "3/4");
  CHECK(Rational(-8, 2).str() == "-4");
  CHECK_THROWS_AS(Rational::parse("a/b"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
}

TEST_CASE("gen_binomial") {
  CHECK(gen_binomial(Rational(5), 2) == Rational(10));
  CHECK(gen_binomial(Rational(-1), 0) == Rational(1));
  CHECK(gen_binomial(Rational(3, 2), 2) == Rational(3, 8));
  CHECK(gen_binomial(Rational(-1), 1) == Rational(-1));
}

TEST_CASE("integer binomial matches the falling factorial") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 200; ++iter) {
    const long long n = static_cast<long long>(rng() % 41) - 20;
    const unsigned long k = rng() % 6;
    CHECK(Rational(int_binomial(Int(static_cast<long>(n)), k)) ==
          gen_binomial(Rational(n), k));
  }
}

}  // TEST_SUITE
