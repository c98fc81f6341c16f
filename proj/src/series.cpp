#include "fdt/series.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdt/gamma.hpp"

namespace fdt {

CoeffSeq::CoeffSeq(RationalOrder alpha, std::vector<double> coeffs)
    : alpha_(alpha), coeffs_(std::move(coeffs)) {
  if (alpha_.is_zero() || RationalOrder(1) < alpha_)
    throw std::invalid_argument("CoeffSeq: alpha must satisfy 0 < alpha <= 1");
  if (coeffs_.empty()) throw std::invalid_argument("CoeffSeq: empty coefficient list");
  for (double c : coeffs_)
    if (!std::isfinite(c)) throw std::invalid_argument("CoeffSeq: non-finite coefficient");
}

CoeffSeq CoeffSeq::prefix(std::int64_t max_index) const {
  if (max_index < 0) throw std::invalid_argument("CoeffSeq::prefix: negative index");
  const auto n = std::min<std::size_t>(coeffs_.size(), static_cast<std::size_t>(max_index) + 1);
  return CoeffSeq(alpha_, std::vector<double>(coeffs_.begin(), coeffs_.begin() + n));
}

CoeffSeq monomial_transform(const Monomial& m, const RationalOrder& alpha, std::int64_t trunc_index) {
  const std::int64_t idx = index_of(m.exponent, alpha);
  if (trunc_index < idx)
    throw std::invalid_argument("monomial_transform: truncation index below exponent index");
  std::vector<double> c(static_cast<std::size_t>(trunc_index) + 1, 0.0);
  c[static_cast<std::size_t>(idx)] = m.coefficient;
  return CoeffSeq(alpha, std::move(c));
}

CoeffSeq cauchy_product(const CoeffSeq& g, const CoeffSeq& h) {
  if (!(g.alpha() == h.alpha())) throw std::invalid_argument("cauchy_product: grid mismatch");
  const std::size_t n = std::min(g.size(), h.size());
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    double acc = 0.0;
    for (std::size_t l = 0; l <= k; ++l) acc += g[l] * h[k - l];
    out[k] = acc;
  }
  return CoeffSeq(g.alpha(), std::move(out));
}

CoeffSeq shift_divide(const CoeffSeq& g, const RationalOrder& r, double tol) {
  const std::int64_t s = index_of(r, g.alpha());
  if (s > g.max_index()) throw std::invalid_argument("shift_divide: shift exceeds series length");
  for (std::int64_t j = 0; j < s; ++j)
    if (std::abs(g[static_cast<std::size_t>(j)]) > tol)
      throw std::domain_error("shift_divide: result has negative-power terms");
  std::vector<double> out(g.coeffs().begin() + s, g.coeffs().end());
  return CoeffSeq(g.alpha(), std::move(out));
}

CoeffSeq shift_divide(const CoeffSeq& g, const RationalOrder& r) {
  double m = 0.0;
  for (double c : g.coeffs()) m = std::max(m, std::abs(c));
  return shift_divide(g, r, 1e-12 * m);
}

CoeffSeq caputo_transform(const CoeffSeq& g, const RationalOrder& beta) {
  const std::int64_t b = index_of(beta, g.alpha());
  if (b > g.max_index())
    throw std::invalid_argument("caputo_transform: derivative order exceeds series length");
  const double bv = beta.value();
  const std::size_t n = g.size() - static_cast<std::size_t>(b);
  std::vector<double> out(n, 0.0);
  for (std::size_t k = 0; k < n; ++k) {
    const double ak = static_cast<double>(static_cast<std::int64_t>(k) * g.alpha().num()) /
                      static_cast<double>(g.alpha().den());
    out[k] = gamma_ratio(ak + bv + 1.0, ak + 1.0) * g[k + static_cast<std::size_t>(b)];
  }
  return CoeffSeq(g.alpha(), std::move(out));
}

CoeffSeq polynomial_of_u(const CoeffSeq& u, std::span<const double> poly) {
  if (poly.empty()) throw std::invalid_argument("polynomial_of_u: empty polynomial");
  const std::size_t n = u.size();
  std::vector<double> out(n, 0.0);
  out[0] = poly[0];  // poly[0] * delta
  std::vector<double> pw(n, 0.0);
  pw[0] = 1.0;
  for (std::size_t m = 1; m < poly.size(); ++m) {
    // pw <- pw (conv) u, truncated
    std::vector<double> next(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
      double acc = 0.0;
      for (std::size_t l = 0; l <= k; ++l) acc += pw[l] * u[k - l];
      next[k] = acc;
    }
    pw = std::move(next);
    for (std::size_t k = 0; k < n; ++k) out[k] += poly[m] * pw[k];
  }
  return CoeffSeq(u.alpha(), std::move(out));
}

double evaluate(const CoeffSeq& s, double t) {
  if (t < 0.0 && !s.alpha().is_integer())
    throw std::domain_error("evaluate: fractional power of negative base");
  const double an = static_cast<double>(s.alpha().num());
  const double ad = static_cast<double>(s.alpha().den());
  double sum = 0.0, comp = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 0.0) continue;
    double p;
    if (t == 0.0) {
      p = (k == 0) ? 1.0 : 0.0;
    } else {
      p = std::pow(t, static_cast<double>(k) * an / ad);
    }
    const double term = s[k] * p;
    const double y = term - comp;
    const double next = sum + y;
    comp = (next - sum) - y;
    sum = next;
  }
  return sum;
}

}  // namespace fdt
