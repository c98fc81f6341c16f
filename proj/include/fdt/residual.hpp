#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdt/rational.hpp"
#include "fdt/series.hpp"
#include "fdt/solver.hpp"

namespace fdt {

// Term-wise Caputo derivative of order lambda of a fractional power series.
// Integer powers t^m with m < ceil(lambda) are annihilated; every other term
// c t^nu maps to c Gamma(nu+1)/Gamma(nu-lambda+1) t^(nu-lambda). A nonzero
// term with non-integer power below lambda has no series image and is
// rejected. Coded against libm's gamma, independent of caputo_transform.
CoeffSeq caputo_power_derivative(const CoeffSeq& s, const RationalOrder& lambda);

// Residuals of a truncated series substituted into the equation.
struct ResidualReport {
  std::vector<double> sample_points;
  std::vector<double> residuals;
  std::int64_t truncation_index = 0;
  double max_abs_residual = 0.0;
};

// R(t) = D^(2b) u + (2/t^b) D^b u + f(t) g(u(t)) at each point, all t > 0.
ResidualReport residual(const SeriesSolution& sol, std::span<const double> points);
ResidualReport residual_serial(const SeriesSolution& sol, std::span<const double> points);

// Exact solution of the classical case beta = 1, f = 1, g(u) = u, A = 1:
// sin(t)/t, patched to 1 at t = 0.
double reference_lane_emden(double t);

// Geometric sample grid {t_max * 2^-j}, ascending, all in (0, t_max].
std::vector<double> geometric_points(double t_max, int count);

}  // namespace fdt
