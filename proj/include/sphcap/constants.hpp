#pragma once

namespace sphcap {

// Dimension constants for S^d.
//
//   c_d    = (1/d) Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2))
//   i_d    = 2^d Gamma((d+1)/2)^2 / (sqrt(pi) Gamma(d+1/2))
//            (the mean Euclidean distance of two independent uniform points)
//   cdid   = c_d * i_d
//   f_star = d / (d+1)^{(d+1)/d} * (Gamma(1/2) / Gamma((d+1)/2))^{1/d}
//
// All Gamma ratios are formed in log-domain and exponentiated once, so the
// values stay finite for d up to at least 1e6 even though 2^d and
// Gamma(d+1/2) overflow separately near d ~ 170.
struct SphereConstants {
    int d = 0;
    double c_d = 0.0;
    double i_d = 0.0;
    double cdid = 0.0;
    double f_star = 0.0;
    double log_c_d = 0.0;
    double log_i_d = 0.0;
};

// Memoized per dimension; safe for concurrent callers.
SphereConstants compute_constants(int d);

// Same computation without touching the memo table. Useful for sweeps over
// millions of dimensions where caching would only cost memory.
SphereConstants compute_constants_uncached(int d);

// cdid / (1 - cdid), the ratio driving the classical inverse-discrepancy
// upper bound.
double ratio_cdid(int d);

// The constant (sqrt(e)/(2 sqrt(pi))) * f(9) * h(1) with
//   f(d) = ((sqrt(2 pi)/d) * sqrt(1 + 1/d))^{1/(d+1)}
//   h(d) = exp(-1/(6 (d+1)^2)) / (1 + 1/d)^{3/2};
// evaluates to 0.13953..., strictly greater than 1/8.
double lower_bound_proof_constant();

}  // namespace sphcap
