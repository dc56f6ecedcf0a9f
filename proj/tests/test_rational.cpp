#include <doctest.h>

#include <stdexcept>

#include "renvol/rational.hpp"

using renvol::Rational;

TEST_CASE("construction canonicalizes") {
  CHECK(Rational{2, 4}.str() == "1/2");
  CHECK(Rational{-2, 4}.str() == "-1/2");
  CHECK(Rational{2, -4}.str() == "-1/2");
  CHECK(Rational{-2, -4}.str() == "1/2");
  CHECK(Rational{0, 7}.str() == "0");
  CHECK(Rational{6}.str() == "6");
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("from_string accepts integers and fractions only") {
  CHECK(Rational::from_string("7").str() == "7");
  CHECK(Rational::from_string("-7").str() == "-7");
  CHECK(Rational::from_string("+7").str() == "7");
  CHECK(Rational::from_string("9/10").str() == "9/10");
  CHECK(Rational::from_string("-9/12").str() == "-3/4");
  CHECK_THROWS_AS(Rational::from_string("0.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1e-3"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::from_string("1/-2"), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  const Rational a{1, 3};
  const Rational b{1, 6};
  CHECK(a + b == Rational{1, 2});
  CHECK(a - b == Rational{1, 6});
  CHECK(a * b == Rational{1, 18});
  CHECK(a / b == Rational{2});
  CHECK(-a == Rational{-1, 3});
  CHECK_THROWS_AS(a / Rational{0}, std::invalid_argument);

  // 1/3 has no finite binary representation; exactness distinguishes us
  // from any float-backed fraction.
  Rational third{1, 3};
  Rational acc{0};
  for (int i = 0; i < 3000; ++i) acc += third;
  CHECK(acc == Rational{1000});
}

TEST_CASE("comparisons") {
  CHECK(Rational{1, 3} < Rational{1, 2});
  CHECK(Rational{-1, 2} < Rational{-1, 3});
  CHECK(Rational{2, 4} == Rational{1, 2});
  CHECK(Rational{7, 5} > Rational{1});
  CHECK(Rational{1, 2} <= Rational{1, 2});
}

TEST_CASE("pow and reciprocal") {
  CHECK(Rational{2, 3}.pow(3) == Rational{8, 27});
  CHECK(Rational{2, 3}.pow(-2) == Rational{9, 4});
  CHECK(Rational{2, 3}.pow(0) == Rational{1});
  CHECK(Rational{-1, 2}.pow(3) == Rational{-1, 8});
  CHECK(Rational{0}.pow(4) == Rational{0});
  CHECK_THROWS_AS(Rational{0}.pow(-1), std::invalid_argument);
  CHECK(Rational{3, 7}.reciprocal() == Rational{7, 3});
  CHECK_THROWS_AS(Rational{0}.reciprocal(), std::invalid_argument);
}

TEST_CASE("factorial") {
  CHECK(Rational::factorial(0) == Rational{1});
  CHECK(Rational::factorial(1) == Rational{1});
  CHECK(Rational::factorial(5) == Rational{120});
  CHECK(Rational::factorial(20).str() == "2432902008176640000");
}

TEST_CASE("numerator and denominator strings") {
  const Rational r{-6, 8};
  CHECK(r.numerator_str() == "-3");
  CHECK(r.denominator_str() == "4");
  CHECK(Rational{5}.denominator_str() == "1");
}
