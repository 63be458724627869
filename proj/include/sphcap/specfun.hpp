#pragma once

namespace sphcap::specfun {

// ln Gamma(x) for finite x > 0. Relative error a few ulp over the whole
// supported range (x up to 1e7 and beyond).
double log_gamma(double x);

// Regularized incomplete beta I_x(a, b) for a, b > 0 and x in [0, 1].
// Monotone non-decreasing in x; continued-fraction evaluation with the
// standard symmetry switch at x > (a+1)/(a+b+2).
double regularized_incomplete_beta(double a, double b, double x);

// ln of the rising factorial (a)_n for a > 0, n >= 0.
// Equals log_gamma(a + n) - log_gamma(a).
double log_pochhammer(double a, long long n);

}  // namespace sphcap::specfun
