#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fdt/rational.hpp"

using fdt::RationalOrder;

TEST_CASE("normalize reduces to lowest terms") {
  CHECK(fdt::normalize(6, 8) == RationalOrder(3, 4));
  CHECK(fdt::normalize(1, 1) == RationalOrder(1, 1));
  CHECK(fdt::normalize(2, 4) == RationalOrder(1, 2));
  CHECK(fdt::normalize(0, 7) == RationalOrder(0, 1));
  CHECK_THROWS_AS(fdt::normalize(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(fdt::normalize(-1, 2), std::invalid_argument);
  CHECK_THROWS_AS(fdt::normalize(3, -6), std::invalid_argument);  // value would be negative
}

TEST_CASE("normalize is idempotent") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::int64_t> d(0, 500);
  for (int i = 0; i < 200; ++i) {
    const auto r = fdt::normalize(d(rng), d(rng) + 1);
    CHECK(fdt::normalize(r.num(), r.den()) == r);
  }
}

TEST_CASE("select_alpha picks the reciprocal of the least common denominator") {
  CHECK(fdt::select_alpha({RationalOrder(3, 4), RationalOrder(3, 2)}) == RationalOrder(1, 4));
  CHECK(fdt::select_alpha({RationalOrder(1), RationalOrder(2)}) == RationalOrder(1, 1));
  CHECK(fdt::select_alpha({RationalOrder(2, 3), RationalOrder(1, 2)}) == RationalOrder(1, 6));

  CHECK_THROWS_AS(fdt::select_alpha(std::span<const RationalOrder>{}), std::invalid_argument);
  CHECK_THROWS_AS(fdt::select_alpha({RationalOrder(0, 1)}), std::invalid_argument);
}

TEST_CASE("index_of recovers exact grid indices") {
  CHECK(fdt::index_of(RationalOrder(3, 4), RationalOrder(1, 4)) == 3);
  CHECK(fdt::index_of(RationalOrder(3, 2), RationalOrder(1, 4)) == 6);
  CHECK(fdt::index_of(RationalOrder(1), RationalOrder(1, 4)) == 4);
  CHECK_THROWS_AS(fdt::index_of(RationalOrder(1, 3), RationalOrder(1, 2)), std::invalid_argument);
}

TEST_CASE("every order lands on the selected grid exactly") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::int64_t> num(1, 40), den(1, 12), count(1, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<RationalOrder> orders;
    const auto n = count(rng);
    for (std::int64_t i = 0; i < n; ++i) orders.emplace_back(num(rng), den(rng));
    const RationalOrder alpha = fdt::select_alpha(orders);

    CHECK(alpha <= RationalOrder(1));
    CHECK(alpha.num() == 1);  // 1/alpha is an integer
    for (const auto& o : orders) {
      const std::int64_t k = fdt::index_of(o, alpha);
      CHECK(alpha.times(k) == o);
    }
  }
}
