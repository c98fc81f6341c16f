#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "fdt/eval.hpp"
#include "fdt/series.hpp"

using fdt::CoeffSeq;
using fdt::RationalOrder;

TEST_CASE("parallel batch evaluation is bit-identical to the serial reference") {
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> c(65);
  for (auto& x : c) x = coeff(rng);
  const CoeffSeq s(RationalOrder(1, 4), c);

  std::vector<double> ts(10000);
  for (std::size_t i = 0; i < ts.size(); ++i) ts[i] = 3.0 * static_cast<double>(i) / (ts.size() - 1);

  const auto serial = fdt::evaluate_many_serial(s, ts);
  const auto parallel = fdt::evaluate_many(s, ts);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i] == parallel[i]);
}

TEST_CASE("batch evaluation matches point evaluation") {
  const CoeffSeq s(RationalOrder(1, 2), {1.0, -0.5, 0.25});
  const std::vector<double> ts{0.0, 0.3, 1.7};
  const auto out = fdt::evaluate_many(s, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) CHECK(out[i] == fdt::evaluate(s, ts[i]));
}
