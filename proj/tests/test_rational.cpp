#include "doctest.h"
#include "okdh/linalg.hpp"
#include "okdh/rational.hpp"

using namespace okdh;

TEST_CASE("parse and print rationals") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(parse_rational(" -7 ") == Rational(-7));
  CHECK(parse_rational("0/5") == 0);
  CHECK(to_string(Rational(3, 2)) == "3/2");
  CHECK(to_string(parse_rational("-4/2")) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), ValidationError);
  CHECK_THROWS_AS(parse_rational("1.5"), ValidationError);
  CHECK_THROWS_AS(parse_rational("3/-2"), ValidationError);
  CHECK_THROWS_AS(parse_rational(""), ValidationError);
}

TEST_CASE("decimal rendering") {
  CHECK(to_decimal(Rational(1, 2)) == "0.50000000000000000000");
  CHECK(to_decimal(Rational(1, 3)) == "0.33333333333333333333");
  CHECK(to_decimal(Rational(2, 3)) == "0.66666666666666666667");
  CHECK(to_decimal(Rational(-1, 8), 3) == "-0.125");
  CHECK(to_decimal(Rational(0)) == "0.0000000000000000000");
  CHECK(to_decimal(Rational(12345), 3) == "12300");
  CHECK(to_decimal(Rational(99999, 100000), 3) == "1.00");
  CHECK(to_decimal(Rational(1, 200), 2) == "0.0050");
}

TEST_CASE("floor and ceil") {
  CHECK(floor(Rational(-1, 2)) == -1);
  CHECK(ceil(Rational(-1, 2)) == 0);
  CHECK(floor(Rational(7, 3)) == 2);
  CHECK(ceil(Rational(7, 3)) == 3);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("exact linear algebra") {
  RationalMatrix a{{2, 1}, {1, 3}};
  CHECK(determinant(a) == 5);
  auto x = solve(a, {3, 5});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(4, 5));
  CHECK((*x)[1] == Rational(7, 5));
  CHECK_FALSE(solve({{1, 2}, {2, 4}}, {1, 1}));

  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(multiply(*inv, {3, 5}) == *x);

  auto ns = nullspace({{1, 1, 1}}, 3);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) CHECK(v[0] + v[1] + v[2] == 0);

  CHECK(affine_dimension({{0, 0}, {1, 1}, {2, 2}}) == 1);
  CHECK(affine_dimension({{0, 0}, {1, 0}, {0, 1}}) == 2);
  CHECK(affine_dimension({}) == -1);
}
