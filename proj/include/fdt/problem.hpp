#pragma once

#include <stdexcept>
#include <vector>

#include "fdt/rational.hpp"
#include "fdt/series.hpp"

namespace fdt {

// Singular initial value problem
//   D^(2 beta) u + (2 / t^beta) D^beta u + f(t) g(u) = 0,  u(0) = A, u'(0) = 0,
// with Caputo derivatives, f a sum of monomials and g a polynomial.
// The condition u'(0) = 0 carries meaning only for 1/2 < beta <= 1, which is
// enforced here.
struct ProblemSpec {
  RationalOrder beta;
  double A = 0.0;
  std::vector<Monomial> f_monomials;
  std::vector<double> g_poly;

  ProblemSpec(RationalOrder beta_, double A_, std::vector<Monomial> f, std::vector<double> g)
      : beta(beta_), A(A_), f_monomials(std::move(f)), g_poly(std::move(g)) {
    if (!(RationalOrder(1, 2) < beta) || !(beta <= RationalOrder(1)))
      throw std::invalid_argument("beta out of range: need 1/2 < beta <= 1, got " + beta.str());
    if (f_monomials.empty()) throw std::invalid_argument("f must have at least one monomial");
    if (g_poly.empty()) throw std::invalid_argument("g must have at least one coefficient");
  }
};

}  // namespace fdt
