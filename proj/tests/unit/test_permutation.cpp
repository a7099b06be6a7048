#include "doctest.h"
#include "wbcc/permutation.hpp"

#include <stdexcept>

using namespace wbcc;

TEST_CASE("construction validates the bijection") {
  CHECK_NOTHROW(Permutation({2, 3, 1}));
  CHECK_THROWS_AS(Permutation({1, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({1, 3}), std::invalid_argument);
  CHECK(Permutation::identity(0).size() == 0);
}

TEST_CASE("cycle types") {
  CHECK(cycle_type(Permutation::identity(3)) == std::vector<std::size_t>{1, 1, 1});
  CHECK(cycle_type(Permutation({2, 3, 1})) == std::vector<std::size_t>{3});
  CHECK(cycle_type(Permutation({2, 1, 4, 3})) == std::vector<std::size_t>{2, 2});
  CHECK(cycle_type(Permutation({3, 1, 2, 5, 4})) == std::vector<std::size_t>{3, 2});
}

TEST_CASE("cycle statistics") {
  CHECK(cycle_stats(Permutation::identity(4), 2) == CycleStats{4, 0});
  CHECK(cycle_stats(Permutation({2, 1, 4, 3}), 2) == CycleStats{0, 2});
  CHECK(cycle_stats(Permutation({2, 3, 1}), 3) == CycleStats{0, 1});
  CHECK(cycle_stats(Permutation({2, 1, 4, 3}), 3) == CycleStats{2, 0});
  CHECK_THROWS_AS(cycle_stats(Permutation::identity(2), 1), std::invalid_argument);
}

TEST_CASE("lexicographic enumeration visits n! permutations with consistent statistics") {
  Permutation p = Permutation::identity(5);
  std::size_t count = 0;
  do {
    ++count;
    std::size_t total = 0;
    const auto lengths = cycle_type(p);
    for (auto len : lengths) total += len;
    REQUIRE(total == 5);
    const CycleStats s = cycle_stats(p, 2);
    REQUIRE(s.regular + s.singular == lengths.size());
  } while (p.advance());
  CHECK(count == 120);
  CHECK(p == Permutation::identity(5));
}
