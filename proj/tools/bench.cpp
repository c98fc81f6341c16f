// Compares the OpenMP evaluation kernels against their serial reference on a
// solved series: batch evaluation over a dense grid and a residual sweep.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fdt/eval.hpp"
#include "fdt/residual.hpp"
#include "fdt/solver.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double best_ms(F&& f, int reps) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
  const fdt::ProblemSpec lane_emden(fdt::RationalOrder(1), 1.0, {{1.0, fdt::RationalOrder(0)}},
                                    {0.0, 1.0});
  const fdt::SeriesSolution sol = fdt::solve(lane_emden, 64);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  std::printf("threads: %d\n\n", threads);

  {
    const std::size_t n = 2'000'000;
    std::vector<double> ts(n);
    for (std::size_t i = 0; i < n; ++i) ts[i] = 4.0 * static_cast<double>(i) / static_cast<double>(n - 1);

    std::vector<double> a, b;
    const double serial = best_ms([&] { a = fdt::evaluate_many_serial(sol.coeffs(), ts); }, 3);
    const double parallel = best_ms([&] { b = fdt::evaluate_many(sol.coeffs(), ts); }, 3);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
    std::printf("evaluate_many   %zu points: serial %8.2f ms, parallel %8.2f ms, speedup %.2fx, max|diff| %g\n",
                n, serial, parallel, serial / parallel, max_diff);
  }

  {
    const int n = 20000;
    std::vector<double> pts(n);
    for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = 2.0 * (i + 1) / n;

    fdt::ResidualReport ra, rb;
    const double serial = best_ms([&] { ra = fdt::residual_serial(sol, pts); }, 3);
    const double parallel = best_ms([&] { rb = fdt::residual(sol, pts); }, 3);
    double max_diff = 0.0;
    for (std::size_t i = 0; i < ra.residuals.size(); ++i)
      max_diff = std::max(max_diff, std::abs(ra.residuals[i] - rb.residuals[i]));
    std::printf("residual sweep  %d points: serial %8.2f ms, parallel %8.2f ms, speedup %.2fx, max|diff| %g\n",
                n, serial, parallel, serial / parallel, max_diff);
  }

  return 0;
}
