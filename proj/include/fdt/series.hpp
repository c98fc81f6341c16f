#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fdt/rational.hpp"

namespace fdt {

// Coefficient sequence {U(k)} of a fractional power series
// u(t) = sum_k U(k) * t^(alpha k), centered at the origin.
// Immutable after construction.
class CoeffSeq {
 public:
  CoeffSeq(RationalOrder alpha, std::vector<double> coeffs);

  const RationalOrder& alpha() const { return alpha_; }
  const std::vector<double>& coeffs() const { return coeffs_; }
  double operator[](std::size_t k) const { return coeffs_[k]; }
  std::size_t size() const { return coeffs_.size(); }
  std::int64_t max_index() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  double base_point() const { return 0.0; }

  // First max_index+1 entries, same grid.
  CoeffSeq prefix(std::int64_t max_index) const;

 private:
  RationalOrder alpha_;
  std::vector<double> coeffs_;
};

struct Monomial {
  double coefficient = 0.0;
  RationalOrder exponent;
};

// Transform of c * t^r on the alpha grid: a single delta at index r/alpha.
CoeffSeq monomial_transform(const Monomial& m, const RationalOrder& alpha, std::int64_t trunc_index);

// Transform of a pointwise product: discrete convolution, truncated to the
// shorter input.
CoeffSeq cauchy_product(const CoeffSeq& g, const CoeffSeq& h);

// Transform of g(t) / t^r: index shift by r/alpha. The dropped leading
// coefficients must vanish (|g[j]| <= tol), otherwise the quotient is not a
// fractional power series.
CoeffSeq shift_divide(const CoeffSeq& g, const RationalOrder& r, double tol);
CoeffSeq shift_divide(const CoeffSeq& g, const RationalOrder& r);  // tol = 1e-12 * max|g|

// Transform of the Caputo derivative of order beta:
// result[k] = Gamma(alpha k + beta + 1)/Gamma(alpha k + 1) * g[k + beta/alpha].
CoeffSeq caputo_transform(const CoeffSeq& g, const RationalOrder& beta);

// Transform of p(u(t)) for a polynomial p given lowest-degree-first:
// sum_m poly[m] * u^(conv m), with u^(conv 0) the delta sequence. Entry k
// depends only on u[0..k].
CoeffSeq polynomial_of_u(const CoeffSeq& u, std::span<const double> poly);

// Inverse transform: sum_k s[k] * t^(alpha k), increasing k, compensated
// summation. t^0 is 1 at t = 0.
double evaluate(const CoeffSeq& s, double t);

}  // namespace fdt
