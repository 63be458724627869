#pragma once

#include <cstdint>

#include "sphcap/constants.hpp"
#include "sphcap/sphere.hpp"

namespace sphcap {

// The cap-height scale alpha in [0, 1] with its validity classification for
// one dimension d:
//   Hemisphere: alpha = 0            (geodesic closed form)
//   ClosedForm: C_d I_d < alpha <= 1 (distance-kernel closed form)
//   McOnly:     0 < alpha <= C_d I_d (only the definition-based Monte Carlo
//                                     estimate is meaningful; the closed form
//                                     is not extrapolated there)
enum class CapScaleMode { Hemisphere, ClosedForm, McOnly };

class CapScale {
public:
    CapScale(double alpha, int d);

    double alpha() const { return alpha_; }
    int dim() const { return d_; }
    CapScaleMode mode() const { return mode_; }
    const SphereConstants& constants() const { return k_; }

private:
    double alpha_;
    int d_;
    CapScaleMode mode_;
    SphereConstants k_;
};

struct McEstimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::int64_t n_samples = 0;
    Seed seed;
};

// Distance kernel 1 - (C_d / alpha) ||x - y||. Requires a ClosedForm scale.
double kernel_value(const CapScale& scale, const SpherePoint& x, const SpherePoint& y);

// Hemisphere kernel 1 - d(x, y) with d the normalized geodesic distance.
double hemisphere_kernel_value(int d, const SpherePoint& x, const SpherePoint& y);

// (C_d / alpha) * (I_d - (1/N^2) sum_{m,n} ||x_m - x_n||), the closed-form
// squared discrepancy of the distance-kernel energy. Pair sums run over
// m < n (doubled) with compensated summation; tiny negative results within
// 1e-12 are clamped to zero, anything more negative raises InternalError.
double stolarsky_l2_squared(const PointSet& p, const CapScale& scale);

// 1/2 - (1/N^2) sum_{m,n} d(x_m, x_n): squared hemisphere discrepancy.
double hemisphere_l2_squared(const PointSet& p);

// Squared discrepancy of the empty set: 1 - C_d I_d / alpha for ClosedForm
// scales, 1/2 for the hemisphere scale.
double initial_l2_squared(int d, const CapScale& scale);

// Monte Carlo estimate of the definition-based squared discrepancy
//
//   int_{-1}^{1} int_{S^d} ((1/N) sum_n 1_{C(z; alpha t)}(x_n)
//                           - sigma_d(C(z; alpha t)))^2 dsigma_d(z) dt,
//
// with Gauss-Legendre quadrature over t (n_t_nodes) and n_sphere_samples
// i.i.d. uniform z shared across all t nodes. Valid for every alpha in
// [0, 1], including the McOnly regime. The returned std_error is the
// standard error of the mean over the z samples; deterministic given all
// arguments.
McEstimate mc_definition_l2_squared(const PointSet& p, double alpha,
                                    std::int64_t n_sphere_samples, int n_t_nodes,
                                    Seed seed);

// Minimum eigenvalue of the N x N kernel Gram matrix (N <= 64), via cyclic
// Jacobi. ClosedForm scales use kernel_value, the hemisphere scale uses
// hemisphere_kernel_value.
double gram_min_eigenvalue(const PointSet& p, const CapScale& scale);

// Partial sum through l = terms of
//   1 + sum_{l>=1} ((-1/2)_l / l!) inner^l  ->  sqrt(1 - inner),
// the expansion of ||x - y|| / sqrt(2) in the inner product. Coefficients
// are formed in log-domain with the (negative) sign handled explicitly.
double distance_series_partial(double inner, int terms);

// (1/2)_r / ((d+1)/2)_r: the moment int int <x,y>^{2r} dsigma dsigma on S^d.
double moment_integral(int d, int r);

// (1 / (2 sqrt(2 pi))) * m^{-1/2}: lower bound for the tail
// sum_{r >= m} -(-1/2)_{2r} / (2r)! of the distance-series coefficients.
double series_tail_lower(int m);

// (C_d I_d / alpha) * (F(x_d^*) / (2 sqrt(2 pi))) * n^{-(d+1)/d}: universal
// lower bound for stolarsky_l2_squared over all n-point sets.
double stolarsky_lower_bound(int d, double alpha, std::int64_t n);

}  // namespace sphcap
