#include "doctest.h"
#include "oracle.hpp"
#include "wbcc/series.hpp"

#include <random>
#include <stdexcept>

using wbcc::BigRational;
using wbcc::BiPoly;
using wbcc::TruncSeries;

namespace {
const BiPoly x = BiPoly::x();
const BiPoly y = BiPoly::y();

TruncSeries series(std::vector<BiPoly> cs) { return TruncSeries(std::move(cs)); }

BigRational frac(long p, long q) { return BigRational(wbcc::BigInt(p), wbcc::BigInt(q)); }

TruncSeries random_series(std::mt19937& rng, std::size_t order) {
  std::vector<BiPoly> cs(order + 1);
  for (std::size_t k = 1; k <= order; ++k) cs[k] = wbcc::oracle::random_poly(rng, 3, 2);
  return TruncSeries(std::move(cs));
}
}  // namespace

TEST_CASE("Cauchy product") {
  CHECK(series({1, 1, 0}) * series({1, -1, 0}) == series({1, 0, -1}));
  const TruncSeries geometric = series({1, 1, 1, 1, 1});
  CHECK(geometric * TruncSeries::one(4) == geometric);
  CHECK(series({0, x, 0}) * series({0, y, 0}) == series({0, 0, x * y}));
}

TEST_CASE("mixed orders truncate to the minimum") {
  const TruncSeries a = series({1, 1, 1, 1});
  const TruncSeries b = series({1, 1});
  CHECK((a * b).order() == 1);
  CHECK((a + b).order() == 1);
  CHECK((a - b) == series({0, 0}));
}

TEST_CASE("exponential") {
  CHECK(exp(TruncSeries(5)) == TruncSeries::one(5));
  CHECK(exp(series({0, x, 0, 0})) == series({1, x, frac(1, 2) * x * x, frac(1, 6) * x * x * x}));
  CHECK_THROWS_AS(exp(series({1, x})), std::domain_error);

  // exp(A + B) = exp(A) exp(B) for A = x t, B = y t^2.
  const TruncSeries a = TruncSeries::monomial(x, 1, 6);
  const TruncSeries b = TruncSeries::monomial(y, 2, 6);
  CHECK(exp(a + b) == exp(a) * exp(b));
}

TEST_CASE("derivative") {
  CHECK(derivative(series({1, 1, 1})) == series({1, 2}));
  CHECK(derivative(series({x * y + 3, 0, 0})).is_zero());
  CHECK(derivative(series({0, 0, 0, x})) == series({0, 0, 3 * x}));
  CHECK_THROWS_AS(derivative(TruncSeries(0)), std::invalid_argument);
}

TEST_CASE("exp(a) exp(-a) = 1 on random series") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const TruncSeries a = random_series(rng, 6);
    REQUIRE(exp(a) * exp(-a) == TruncSeries::one(6));
  }
}

TEST_CASE("d/dt exp(a) = a' exp(a) on random series") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 25; ++trial) {
    const TruncSeries a = random_series(rng, 6);
    const TruncSeries e = exp(a);
    REQUIRE(derivative(e) == derivative(a) * e);
  }
}
