#include "fdt/residual.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fdt {

namespace {

// Gamma(nu+1)/Gamma(nu+1-lambda) through libm, the reference path for the
// dual-formula consistency checks.
double power_rule_factor(double nu, double lambda) {
  const double a = nu + 1.0;
  const double b = nu + 1.0 - lambda;
  if (a <= 170.0 && b <= 170.0) return std::tgamma(a) / std::tgamma(b);
  return std::exp(std::lgamma(a) - std::lgamma(b));
}

double horner(std::span<const double> poly, double x) {
  double r = 0.0;
  for (std::size_t i = poly.size(); i-- > 0;) r = r * x + poly[i];
  return r;
}

ResidualReport residual_impl(const SeriesSolution& sol, std::span<const double> points,
                             bool parallel) {
  for (double t : points)
    if (!(t > 0.0)) throw std::invalid_argument("residual: sample points must be positive");

  const ProblemSpec& p = sol.problem();
  const CoeffSeq& u = sol.coeffs();
  const CoeffSeq d2 = caputo_power_derivative(u, p.beta.times(2));
  const CoeffSeq d1 = caputo_power_derivative(u, p.beta);
  const double b = p.beta.value();

  ResidualReport rep;
  rep.sample_points.assign(points.begin(), points.end());
  rep.residuals.resize(points.size());
  rep.truncation_index = sol.truncation_index();

  const std::int64_t n = static_cast<std::int64_t>(points.size());
#pragma omp parallel for schedule(static) if (parallel)
  for (std::int64_t i = 0; i < n; ++i) {
    const double t = points[static_cast<std::size_t>(i)];
    double f = 0.0;
    for (const auto& m : p.f_monomials) f += m.coefficient * std::pow(t, m.exponent.value());
    const double ut = evaluate(u, t);
    rep.residuals[static_cast<std::size_t>(i)] =
        evaluate(d2, t) + 2.0 / std::pow(t, b) * evaluate(d1, t) + f * horner(p.g_poly, ut);
  }

  double mx = 0.0;
  for (double r : rep.residuals) mx = std::max(mx, std::abs(r));
  rep.max_abs_residual = mx;
  return rep;
}

}  // namespace

CoeffSeq caputo_power_derivative(const CoeffSeq& s, const RationalOrder& lambda) {
  const std::int64_t shift = index_of(lambda, s.alpha());
  const double lam = lambda.value();
  // ceil(lambda) without floating point
  const std::int64_t ceil_lam = (lambda.num() + lambda.den() - 1) / lambda.den();

  const std::int64_t out_top = std::max<std::int64_t>(s.max_index() - shift, 0);
  std::vector<double> out(static_cast<std::size_t>(out_top) + 1, 0.0);

  for (std::int64_t j = 0; j <= s.max_index(); ++j) {
    const double c = s[static_cast<std::size_t>(j)];
    const RationalOrder nu = s.alpha().times(j);
    if (nu.is_integer() && nu.num() < ceil_lam) continue;  // annihilated
    if (j < shift) {
      if (c != 0.0) throw std::domain_error("series not in the Caputo domain");
      continue;
    }
    if (c == 0.0) continue;
    out[static_cast<std::size_t>(j - shift)] = c * power_rule_factor(nu.value(), lam);
  }
  return CoeffSeq(s.alpha(), std::move(out));
}

ResidualReport residual(const SeriesSolution& sol, std::span<const double> points) {
  return residual_impl(sol, points, true);
}

ResidualReport residual_serial(const SeriesSolution& sol, std::span<const double> points) {
  return residual_impl(sol, points, false);
}

double reference_lane_emden(double t) {
  if (t < 0.0) throw std::domain_error("reference_lane_emden: negative t");
  if (t == 0.0) return 1.0;
  return std::sin(t) / t;
}

std::vector<double> geometric_points(double t_max, int count) {
  if (!(t_max > 0.0) || count < 1) throw std::invalid_argument("geometric_points: bad arguments");
  std::vector<double> pts(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j)
    pts[static_cast<std::size_t>(j)] = t_max * std::ldexp(1.0, -(count - 1 - j));
  return pts;
}

}  // namespace fdt
