#pragma once

namespace fdt {

// Gamma function for x in (0, 170], relative error <= 1e-12.
// Integer and half-integer arguments up to 21 / 20.5 are computed by exact
// recurrence from 1 and sqrt(pi); everything else goes through a Lanczos
// approximation (g = 7, 9 coefficients).
double gamma(double x);

// log Gamma(x) for x > 0, without the overflow cap of gamma().
double log_gamma(double x);

// Gamma(a)/Gamma(b) for a, b > 0 to relative error <= 1e-11. Integer
// offsets a - b reduce to a rising product; otherwise the quotient is
// formed directly for small arguments and in the log domain once either
// argument exceeds 20.
double gamma_ratio(double a, double b);

}  // namespace fdt
