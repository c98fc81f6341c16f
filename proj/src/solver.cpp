#include "fdt/solver.hpp"

#include <stdexcept>
#include <string>

#include "fdt/gamma.hpp"

namespace fdt {

RationalOrder choose_grid(const ProblemSpec& p) {
  std::vector<RationalOrder> orders{p.beta, p.beta.times(2), RationalOrder(1)};
  for (const auto& m : p.f_monomials)
    if (!m.exponent.is_zero()) orders.push_back(m.exponent);
  return select_alpha(orders);
}

std::vector<double> ic_transform(const ProblemSpec& p, const RationalOrder& alpha) {
  const std::int64_t pp = index_of(p.beta, alpha);
  const std::int64_t one = index_of(RationalOrder(1), alpha);
  std::vector<double> seeds(static_cast<std::size_t>(2 * pp), 0.0);
  seeds[0] = p.A;
  seeds[static_cast<std::size_t>(one)] = 0.0;  // u'(0) = 0; one < 2*pp since beta > 1/2
  return seeds;
}

double denominator(std::int64_t k, const RationalOrder& beta, const RationalOrder& alpha) {
  const double ak = static_cast<double>(k * alpha.num()) / static_cast<double>(alpha.den());
  const double b = beta.value();
  try {
    return gamma_ratio(ak + 2.0 * b + 1.0, ak + 1.0) + 2.0 * gamma_ratio(ak + 2.0 * b + 1.0, ak + b + 1.0);
  } catch (const std::overflow_error&) {
    throw std::overflow_error("denominator: gamma overflow at k = " + std::to_string(k));
  }
}

SeriesSolution solve(const ProblemSpec& p, std::int64_t trunc_index) {
  const RationalOrder alpha = choose_grid(p);
  const std::int64_t pp = index_of(p.beta, alpha);
  const std::int64_t twop = 2 * pp;
  if (trunc_index < twop)
    throw std::invalid_argument("K too small: need K >= " + std::to_string(twop) +
                                " for beta = " + p.beta.str());

  const std::size_t n = static_cast<std::size_t>(trunc_index) + 1;
  std::vector<double> u(n, 0.0);
  const std::vector<double> seeds = ic_transform(p, alpha);
  for (std::size_t j = 0; j < seeds.size(); ++j) u[j] = seeds[j];

  // Transform of f; monomials beyond the truncation cannot influence U[0..K].
  std::vector<double> f(n, 0.0);
  for (const auto& m : p.f_monomials) {
    const std::int64_t idx = index_of(m.exponent, alpha);
    if (idx <= trunc_index) f[static_cast<std::size_t>(idx)] += m.coefficient;
  }

  // G(k) = transform of g(u) at index k, built from memoized powers of u.
  const std::size_t deg = p.g_poly.size() - 1;
  const std::size_t rows = static_cast<std::size_t>(trunc_index - twop) + 1;
  std::vector<std::vector<double>> pw(deg + 1, std::vector<double>(rows, 0.0));
  pw[0][0] = 1.0;
  std::vector<double> g(rows, 0.0);

  for (std::size_t k = 0; k < rows; ++k) {
    for (std::size_t m = 1; m <= deg; ++m) {
      double acc = 0.0;
      for (std::size_t l = 0; l <= k; ++l) acc += pw[m - 1][l] * u[k - l];
      pw[m][k] = acc;
    }
    double gk = p.g_poly[0] * pw[0][k];
    for (std::size_t m = 1; m <= deg; ++m) gk += p.g_poly[m] * pw[m][k];
    g[k] = gk;

    double conv = 0.0;
    for (std::size_t l = 0; l <= k; ++l) conv += f[l] * g[k - l];

    // conv == 0 propagates exact zeros through the recurrence.
    u[k + static_cast<std::size_t>(twop)] = (conv == 0.0) ? 0.0 : -conv / denominator(static_cast<std::int64_t>(k), p.beta, alpha);
  }

  return SeriesSolution(p, alpha, CoeffSeq(alpha, std::move(u)), trunc_index);
}

}  // namespace fdt
