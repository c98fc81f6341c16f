#pragma once

#include <cstdint>
#include <vector>

#include "fdt/problem.hpp"
#include "fdt/rational.hpp"
#include "fdt/series.hpp"

namespace fdt {

// Grid step for a problem: reciprocal of the least common denominator of
// {beta, 2 beta, the exponents of f, 1}. Every order in the transformed
// equation is an integer multiple of the result.
RationalOrder choose_grid(const ProblemSpec& p);

// Transformed initial data: the first 2 * index_of(beta, alpha) coefficients.
// Entry 0 is u(0) = A, the index_of(1, alpha) slot encodes u'(0) = 0, and
// every index whose order alpha*k is not an integer is 0.
std::vector<double> ic_transform(const ProblemSpec& p, const RationalOrder& alpha);

// Coefficient multiplying U(k + 2 beta/alpha) in the transformed equation:
//   Gamma(ak + 2b + 1)/Gamma(ak + 1) + 2 Gamma(ak + 2b + 1)/Gamma(ak + b + 1),
// with ak = alpha*k, b = beta. Strictly positive for all k >= 0.
double denominator(std::int64_t k, const RationalOrder& beta, const RationalOrder& alpha);

class SeriesSolution {
 public:
  SeriesSolution(ProblemSpec problem, RationalOrder alpha, CoeffSeq coeffs,
                 std::int64_t truncation_index)
      : problem_(std::move(problem)),
        alpha_(alpha),
        coeffs_(std::move(coeffs)),
        truncation_index_(truncation_index) {}

  const ProblemSpec& problem() const { return problem_; }
  const RationalOrder& alpha() const { return alpha_; }
  const CoeffSeq& coeffs() const { return coeffs_; }
  std::int64_t truncation_index() const { return truncation_index_; }

  double evaluate(double t) const { return fdt::evaluate(coeffs_, t); }

 private:
  ProblemSpec problem_;
  RationalOrder alpha_;
  CoeffSeq coeffs_;
  std::int64_t truncation_index_;
};

// Truncated series solution up to grid index K. Seeds the first
// 2*index_of(beta, alpha) coefficients from the initial data, then fills the
// rest from the coefficient recurrence
//   U(k + 2p) = -( sum_{l<=k} F(l) G(k-l) ) / denominator(k),
// where F is the transform of f and G the transform of g(u), built
// incrementally (entry k of G needs only U[0..k]).
SeriesSolution solve(const ProblemSpec& p, std::int64_t trunc_index);

}  // namespace fdt
