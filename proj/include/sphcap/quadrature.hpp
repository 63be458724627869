#pragma once

#include <vector>

namespace sphcap {

struct GaussLegendreRule {
    std::vector<double> nodes;    // ascending in (-1, 1)
    std::vector<double> weights;  // positive, sum to 2
};

// n-point Gauss-Legendre rule on [-1, 1]. Newton iteration on the Legendre
// recurrence; nodes accurate to ~1 ulp for the n used here (n <= a few
// thousand).
GaussLegendreRule gauss_legendre(int n);

}  // namespace sphcap
