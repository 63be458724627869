#pragma once

#include <utility>
#include <vector>

#include "sphcap/sphere.hpp"

namespace sphcap {

struct OptimizeReport {
    double initial_objective = 0.0;
    double final_objective = 0.0;
    long iterations = 0;  // accepted ascent steps
    // (iteration, objective) after each accepted step; entry 0 is the start.
    std::vector<std::pair<long, double>> step_trace;
};

// sum_{m,n} ||x_m - x_n|| over ordered pairs (the diagonal contributes 0).
double sum_pairwise_distance(const PointSet& p);

// Projected gradient ascent on the pairwise-distance sum:
//   x_m <- normalize(x_m + eta * P_{x_m}(sum_{k != m} (x_m - x_k)/||x_m - x_k||))
// with backtracking (eta halves on objective decrease, floor 1e-12) starting
// from eta = 1/N. Stops when the relative gain of an accepted step drops
// below tol or after max_iters accepted steps. Local method; use restarts
// for anything resembling a global claim. Pairs closer than 1e-9 are skipped
// in the gradient; a start set with coincident points gets one deterministic
// jitter of magnitude 1e-6 first.
std::pair<PointSet, OptimizeReport> maximize_pairwise_distance(const PointSet& p0,
                                                               int max_iters, double tol);

}  // namespace sphcap
