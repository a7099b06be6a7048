#include "doctest.h"
#include "wbcc/rational.hpp"

#include <stdexcept>

using wbcc::BigInt;
using wbcc::BigRational;

TEST_CASE("BigRational is kept canonical") {
  const BigRational q(BigInt(6), BigInt(-4));
  CHECK(q.numerator() == -3);
  CHECK(q.denominator() == 2);

  const BigRational zero(BigInt(0), BigInt(-7));
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(zero.to_string() == "0");
}

TEST_CASE("BigRational arithmetic") {
  const BigRational half(BigInt(1), BigInt(2));
  const BigRational third(BigInt(1), BigInt(3));
  CHECK(half + third == BigRational(BigInt(5), BigInt(6)));
  CHECK(half - third == BigRational(BigInt(1), BigInt(6)));
  CHECK(half * third == BigRational(BigInt(1), BigInt(6)));
  CHECK(half / third == BigRational(BigInt(3), BigInt(2)));
  CHECK(-half < third);
  CHECK_THROWS_AS(half / BigRational(0), std::domain_error);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(0)), std::invalid_argument);
}

TEST_CASE("parse accepts integers and fractions") {
  CHECK(BigRational::parse("42") == 42);
  CHECK(BigRational::parse("-3/2") == BigRational(BigInt(-3), BigInt(2)));
  CHECK(BigRational::parse("+4/6") == BigRational(BigInt(2), BigInt(3)));
  CHECK(BigRational::parse("123456789012345678901234567890").numerator() ==
        BigInt("123456789012345678901234567890"));
  CHECK_THROWS_AS(BigRational::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(BigRational::parse("1.5"), std::invalid_argument);
}

TEST_CASE("checked narrowing to integers") {
  CHECK(BigRational(BigInt(10), BigInt(5)).to_integer() == 2);
  CHECK_THROWS_AS(BigRational(BigInt(1), BigInt(2)).to_integer(), std::domain_error);
}

TEST_CASE("factorial") {
  CHECK(wbcc::factorial(0) == 1);
  CHECK(wbcc::factorial(12) == 479001600);
  CHECK(wbcc::to_string(wbcc::factorial(25)) == "15511210043330985984000000");
}
