#pragma once

#include <string>
#include <vector>

#include "sphcap/rng.hpp"

namespace sphcap {

// A point on S^d, stored as d+1 coordinates. The constructor renormalizes
// whenever the input norm is more than 1e-12 away from 1; inputs that are
// already unit to that tolerance are kept bit-for-bit (file round-trips stay
// exact).
class SpherePoint {
public:
    explicit SpherePoint(std::vector<double> coords);

    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    const std::vector<double>& coords() const { return coords_; }
    double operator[](std::size_t i) const { return coords_[i]; }

private:
    std::vector<double> coords_;
};

// Immutable N-point configuration on S^d. N = 0 is allowed (initial
// discrepancy queries); every point must carry exactly d+1 coordinates.
class PointSet {
public:
    PointSet(int d, std::vector<SpherePoint> points, std::string label = {});

    int dim() const { return d_; }
    int n() const { return static_cast<int>(points_.size()); }
    const std::vector<SpherePoint>& points() const { return points_; }
    const SpherePoint& operator[](std::size_t i) const { return points_[i]; }
    const std::string& label() const { return label_; }

private:
    int d_;
    std::vector<SpherePoint> points_;
    std::string label_;
};

// Inner product of two stored unit vectors, clamped to [-1, 1], with exact
// handling of the bitwise-equal and bitwise-negated cases (returns +1 / -1).
// Stored coordinates carry norm 1 +- O(1e-16); without the exact cases,
// distance formulas would report ~1e-8 for identical points and antipodal
// pair sums would miss the 1e-12 tolerances downstream.
double unit_dot(const SpherePoint& x, const SpherePoint& y);

// n i.i.d. uniform points on S^d: isotropic Gaussian in R^{d+1}, normalized.
// Deterministic given (d, n, seed); point i depends only on (seed, i).
PointSet uniform_points(int d, int n, Seed seed);

// {x_1..x_N, -x_1..-x_N}; negation is exact, so the result is centrally
// symmetric bit-for-bit.
PointSet antipodal_symmetrize(const PointSet& p);

// sqrt(2 (1 - <x,y>)) in [0, 2].
double euclidean_distance(const SpherePoint& x, const SpherePoint& y);

// arccos(<x,y>) / pi in [0, 1].
double geodesic_distance_normalized(const SpherePoint& x, const SpherePoint& y);

// Normalized surface measure of the cap C(x; t) = {y : <x,y> >= t} on S^d;
// independent of the center. Evaluated as (1/2) I_{1-t^2}(d/2, 1/2) for
// t >= 0 (relative accuracy is preserved even when the measure underflows
// toward 0) and via sigma(t) = 1 - sigma(-t) for t < 0.
double cap_measure(int d, double t);

struct CapMeasureEstimate {
    double lower = 0.0;
    double upper = 0.0;
};

// Two-sided estimate for cap_measure, valid for t in (0, 1):
//   lower = sqrt(1-1/d)/sqrt(2 pi d) * (1-t^2)^{d/2}/t * (1 - 1/((d+2) t^2))
//   upper = 1/sqrt(2 pi d) * (1-t^2)^{d/2}/t
// The lower bound is only informative when (d+2) t^2 > 1.
CapMeasureEstimate cap_measure_estimate_check(int d, double t);

// 1 iff <center, query> >= height (closed cap).
bool cap_indicator(const SpherePoint& center, double height, const SpherePoint& query);

}  // namespace sphcap
