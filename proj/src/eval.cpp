#include "fdt/eval.hpp"

#include <cstdint>

namespace fdt {

namespace {

std::vector<double> evaluate_many_impl(const CoeffSeq& s, std::span<const double> ts, bool parallel) {
  std::vector<double> out(ts.size());
  const std::int64_t n = static_cast<std::int64_t>(ts.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i)
    out[static_cast<std::size_t>(i)] = evaluate(s, ts[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace

std::vector<double> evaluate_many(const CoeffSeq& s, std::span<const double> ts) {
  return evaluate_many_impl(s, ts, true);
}

std::vector<double> evaluate_many_serial(const CoeffSeq& s, std::span<const double> ts) {
  return evaluate_many_impl(s, ts, false);
}

}  // namespace fdt
