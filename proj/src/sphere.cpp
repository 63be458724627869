#include "sphcap/sphere.hpp"

#include <cmath>
#include <string>

#include "sphcap/constants.hpp"
#include "sphcap/errors.hpp"
#include "sphcap/specfun.hpp"

namespace sphcap {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;

double raw_dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool bitwise_negated(const std::vector<double>& a, const std::vector<double>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != -b[i]) return false;
    return true;
}

void require_same_dim(const SpherePoint& x, const SpherePoint& y, const char* op) {
    if (x.dim() != y.dim())
        throw DomainError(std::string(op) + ": dimension mismatch (" +
                          std::to_string(x.dim()) + " vs " + std::to_string(y.dim()) + ")");
}

}  // namespace

SpherePoint::SpherePoint(std::vector<double> coords) : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw DomainError("SpherePoint: needs at least 2 coordinates (d >= 1)");
    double sq = 0.0;
    for (double c : coords_) {
        if (!std::isfinite(c)) throw DomainError("SpherePoint: non-finite coordinate");
        sq += c * c;
    }
    const double norm = std::sqrt(sq);
    if (norm < 1e-300) throw DomainError("SpherePoint: zero vector cannot be normalized");
    if (std::abs(norm - 1.0) > 1e-12)
        for (double& c : coords_) c /= norm;
}

PointSet::PointSet(int d, std::vector<SpherePoint> points, std::string label)
    : d_(d), points_(std::move(points)), label_(std::move(label)) {
    if (d_ < 1) throw DomainError("PointSet: requires d >= 1, got d=" + std::to_string(d_));
    for (const SpherePoint& p : points_)
        if (p.dim() != d_)
            throw DomainError("PointSet: point of dimension " + std::to_string(p.dim()) +
                              " in a d=" + std::to_string(d_) + " set");
}

double unit_dot(const SpherePoint& x, const SpherePoint& y) {
    require_same_dim(x, y, "unit_dot");
    const double u = raw_dot(x.coords(), y.coords());
    if (u > 1.0 - 1e-13 && bitwise_equal(x.coords(), y.coords())) return 1.0;
    if (u < -1.0 + 1e-13 && bitwise_negated(x.coords(), y.coords())) return -1.0;
    return std::min(1.0, std::max(-1.0, u));
}

PointSet uniform_points(int d, int n, Seed seed) {
    if (d < 1) throw DomainError("uniform_points: requires d >= 1");
    if (n < 1) throw DomainError("uniform_points: requires n >= 1");
    std::vector<SpherePoint> pts;
    pts.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        RandomStream rs(seed, static_cast<std::uint64_t>(i), tags::kPointSet);
        std::vector<double> v(static_cast<std::size_t>(d) + 1);
        int attempts = 0;
        for (;;) {
            double sq = 0.0;
            for (double& c : v) {
                c = rs.normal();
                sq += c * c;
            }
            if (std::sqrt(sq) >= 1e-300) break;
            if (++attempts >= 100)
                throw InternalError("uniform_points: 100 consecutive degenerate Gaussian draws");
        }
        pts.emplace_back(std::move(v));
    }
    return PointSet(d, std::move(pts));
}

PointSet antipodal_symmetrize(const PointSet& p) {
    if (p.n() < 1) throw DomainError("antipodal_symmetrize: requires a non-empty set");
    std::vector<SpherePoint> pts = p.points();
    pts.reserve(2 * pts.size());
    for (int i = 0; i < p.n(); ++i) {
        std::vector<double> neg = p[static_cast<std::size_t>(i)].coords();
        for (double& c : neg) c = -c;
        pts.emplace_back(std::move(neg));
    }
    return PointSet(p.dim(), std::move(pts), p.label());
}

double euclidean_distance(const SpherePoint& x, const SpherePoint& y) {
    return std::sqrt(2.0 * (1.0 - unit_dot(x, y)));
}

double geodesic_distance_normalized(const SpherePoint& x, const SpherePoint& y) {
    return std::acos(unit_dot(x, y)) / kPi;
}

double cap_measure(int d, double t) {
    if (d < 1) throw DomainError("cap_measure: requires d >= 1");
    if (!(t >= -1.0 && t <= 1.0))
        throw DomainError("cap_measure: requires t in [-1, 1], got t=" + std::to_string(t));
    if (t < 0.0) return 1.0 - cap_measure(d, -t);
    if (t == 0.0) return 0.5;
    // 1 - t^2 as (1-t)(1+t) keeps relative accuracy near t = 1.
    const double x = (1.0 - t) * (1.0 + t);
    return 0.5 * specfun::regularized_incomplete_beta(0.5 * d, 0.5, x);
}

CapMeasureEstimate cap_measure_estimate_check(int d, double t) {
    if (d < 1) throw DomainError("cap_measure_estimate_check: requires d >= 1");
    if (!(t > 0.0 && t < 1.0))
        throw DomainError("cap_measure_estimate_check: requires t in (0, 1)");
    const double dd = static_cast<double>(d);
    // (1-t^2)^{d/2} in log-domain; underflows gracefully for large d t^2.
    const double pow_term = std::exp(0.5 * dd * std::log1p(-t * t));
    const double base = pow_term / (t * std::sqrt(2.0 * kPi * dd));
    CapMeasureEstimate est;
    est.upper = base;
    est.lower = base * std::sqrt(1.0 - 1.0 / dd) * (1.0 - 1.0 / ((dd + 2.0) * t * t));
    return est;
}

bool cap_indicator(const SpherePoint& center, double height, const SpherePoint& query) {
    require_same_dim(center, query, "cap_indicator");
    if (!std::isfinite(height)) throw DomainError("cap_indicator: non-finite height");
    return unit_dot(center, query) >= height;
}

}  // namespace sphcap
