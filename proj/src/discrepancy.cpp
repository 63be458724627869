#include "sphcap/discrepancy.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "sphcap/errors.hpp"
#include "sphcap/linalg.hpp"
#include "sphcap/parallel.hpp"
#include "sphcap/quadrature.hpp"
#include "sphcap/specfun.hpp"
#include "sphcap/summation.hpp"

namespace sphcap {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kLnHalf = -0.69314718055994530941723212145818;
constexpr double kTwoSqrt2Pi = 5.0132565492620005500854638616716;  // 2 sqrt(2 pi)

// Rows are chunked in fixed blocks so the reduction order never depends on
// the thread count.
constexpr std::int64_t kRowChunk = 64;
constexpr std::int64_t kZChunk = 512;

// Sum of f(unit_dot(x_m, x_n)) over all ordered pairs m != n.
template <class F>
double ordered_pair_sum(const PointSet& p, F f) {
    const std::int64_t n = p.n();
    if (n < 2) return 0.0;
    KahanSum total = par::chunked_reduce(
        n - 1, kRowChunk, KahanSum{},
        [&](std::int64_t lo, std::int64_t hi) {
            KahanSum s;
            for (std::int64_t m = lo; m < hi; ++m)
                for (std::int64_t k = m + 1; k < n; ++k)
                    s.add(f(unit_dot(p[static_cast<std::size_t>(m)],
                                     p[static_cast<std::size_t>(k)])));
            return s;
        },
        [](KahanSum& acc, const KahanSum& part) { acc.merge(part); });
    return 2.0 * total.value();
}

double clamp_squared(double raw, const char* what) {
    if (raw >= 0.0) return raw;
    if (raw >= -1e-12) return 0.0;
    throw InternalError(std::string(what) + ": squared discrepancy came out " +
                        std::to_string(raw) + ", below the -1e-12 tolerance");
}

void require_dim(const PointSet& p, const CapScale& scale, const char* op) {
    if (p.dim() != scale.dim())
        throw DomainError(std::string(op) + ": point set dimension " +
                          std::to_string(p.dim()) + " does not match scale dimension " +
                          std::to_string(scale.dim()));
}

const char* mode_name(CapScaleMode m) {
    switch (m) {
        case CapScaleMode::Hemisphere: return "hemisphere";
        case CapScaleMode::ClosedForm: return "closed-form";
        case CapScaleMode::McOnly: return "mc-only";
    }
    return "?";
}

}  // namespace

CapScale::CapScale(double alpha, int d) : alpha_(alpha), d_(d) {
    if (d < 1) throw DomainError("CapScale: requires d >= 1");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("CapScale: requires alpha in [0, 1], got alpha=" +
                          std::to_string(alpha));
    k_ = compute_constants(d);
    if (alpha == 0.0)
        mode_ = CapScaleMode::Hemisphere;
    else if (alpha > k_.cdid)
        mode_ = CapScaleMode::ClosedForm;
    else
        mode_ = CapScaleMode::McOnly;
}

double kernel_value(const CapScale& scale, const SpherePoint& x, const SpherePoint& y) {
    if (scale.mode() != CapScaleMode::ClosedForm)
        throw DomainError(std::string("kernel_value: scale mode is ") +
                          mode_name(scale.mode()) +
                          "; the distance kernel needs alpha in (C_d I_d, 1]");
    if (x.dim() != scale.dim() || y.dim() != scale.dim())
        throw DomainError("kernel_value: dimension mismatch with scale");
    const double dist = std::sqrt(2.0 * (1.0 - unit_dot(x, y)));
    return 1.0 - scale.constants().c_d / scale.alpha() * dist;
}

double hemisphere_kernel_value(int d, const SpherePoint& x, const SpherePoint& y) {
    if (x.dim() != d || y.dim() != d)
        throw DomainError("hemisphere_kernel_value: dimension mismatch");
    return 1.0 - geodesic_distance_normalized(x, y);
}

double stolarsky_l2_squared(const PointSet& p, const CapScale& scale) {
    if (p.n() < 1)
        throw DomainError("stolarsky_l2_squared: empty point set (use initial_l2_squared)");
    require_dim(p, scale, "stolarsky_l2_squared");
    if (scale.mode() != CapScaleMode::ClosedForm)
        throw DomainError(std::string("stolarsky_l2_squared: scale mode is ") +
                          mode_name(scale.mode()) +
                          "; closed form needs alpha in (C_d I_d, 1]");
    const double nn = static_cast<double>(p.n()) * static_cast<double>(p.n());
    const double sum =
        ordered_pair_sum(p, [](double u) { return std::sqrt(2.0 * (1.0 - u)); });
    const SphereConstants& k = scale.constants();
    const double raw = k.c_d / scale.alpha() * (k.i_d - sum / nn);
    return clamp_squared(raw, "stolarsky_l2_squared");
}

double hemisphere_l2_squared(const PointSet& p) {
    if (p.n() < 1)
        throw DomainError("hemisphere_l2_squared: empty point set (use initial_l2_squared)");
    const double nn = static_cast<double>(p.n()) * static_cast<double>(p.n());
    const double sum = ordered_pair_sum(p, [](double u) { return std::acos(u) / kPi; });
    return clamp_squared(0.5 - sum / nn, "hemisphere_l2_squared");
}

double initial_l2_squared(int d, const CapScale& scale) {
    if (scale.dim() != d)
        throw DomainError("initial_l2_squared: dimension does not match scale");
    if (scale.mode() == CapScaleMode::Hemisphere) return 0.5;
    if (scale.mode() == CapScaleMode::ClosedForm)
        return 1.0 - scale.constants().cdid / scale.alpha();
    throw DomainError("initial_l2_squared: alpha in (0, C_d I_d] has no closed-form "
                      "normalization; only the Monte Carlo estimate is defined there");
}

McEstimate mc_definition_l2_squared(const PointSet& p, double alpha,
                                    std::int64_t n_sphere_samples, int n_t_nodes,
                                    Seed seed) {
    if (p.n() < 1) throw DomainError("mc_definition_l2_squared: empty point set");
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw DomainError("mc_definition_l2_squared: requires alpha in [0, 1]");
    if (n_sphere_samples < 1)
        throw DomainError("mc_definition_l2_squared: requires n_sphere_samples >= 1");
    if (n_t_nodes < 1) throw DomainError("mc_definition_l2_squared: requires n_t_nodes >= 1");

    const int d = p.dim();
    const int n = p.n();
    const GaussLegendreRule rule = gauss_legendre(n_t_nodes);
    std::vector<double> heights(rule.nodes.size());
    std::vector<double> sigmas(rule.nodes.size());
    for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
        heights[k] = alpha * rule.nodes[k];
        sigmas[k] = cap_measure(d, heights[k]);
    }

    struct Partial {
        KahanSum sum;
        KahanSum sum_sq;
    };

    Partial total = par::chunked_reduce(
        n_sphere_samples, kZChunk, Partial{},
        [&](std::int64_t lo, std::int64_t hi) {
            Partial part;
            std::vector<double> z(static_cast<std::size_t>(d) + 1);
            std::vector<double> dots(static_cast<std::size_t>(n));
            for (std::int64_t i = lo; i < hi; ++i) {
                RandomStream rs(seed, static_cast<std::uint64_t>(i), tags::kMcSample);
                int attempts = 0;
                for (;;) {
                    double sq = 0.0;
                    for (double& c : z) {
                        c = rs.normal();
                        sq += c * c;
                    }
                    const double norm = std::sqrt(sq);
                    if (norm >= 1e-300) {
                        for (double& c : z) c /= norm;
                        break;
                    }
                    if (++attempts >= 100)
                        throw InternalError("mc_definition_l2_squared: degenerate draws");
                }
                for (int m = 0; m < n; ++m) {
                    const auto& c = p[static_cast<std::size_t>(m)].coords();
                    double dot = 0.0;
                    for (std::size_t j = 0; j < z.size(); ++j) dot += z[j] * c[j];
                    dots[static_cast<std::size_t>(m)] = dot;
                }
                std::sort(dots.begin(), dots.end());
                double s_i = 0.0;
                for (std::size_t k = 0; k < heights.size(); ++k) {
                    const auto it = std::lower_bound(dots.begin(), dots.end(), heights[k]);
                    const double count = static_cast<double>(dots.end() - it);
                    const double dev = count / n - sigmas[k];
                    s_i += rule.weights[k] * dev * dev;
                }
                part.sum.add(s_i);
                part.sum_sq.add(s_i * s_i);
            }
            return part;
        },
        [](Partial& acc, const Partial& part) {
            acc.sum.merge(part.sum);
            acc.sum_sq.merge(part.sum_sq);
        });

    const double m = static_cast<double>(n_sphere_samples);
    McEstimate est;
    est.mean = total.sum.value() / m;
    est.n_samples = n_sphere_samples;
    est.seed = seed;
    if (n_sphere_samples > 1) {
        const double var =
            std::max(0.0, (total.sum_sq.value() - m * est.mean * est.mean) / (m - 1.0));
        est.std_error = std::sqrt(var / m);
    }
    return est;
}

double gram_min_eigenvalue(const PointSet& p, const CapScale& scale) {
    const int n = p.n();
    if (n < 1 || n > 64)
        throw DomainError("gram_min_eigenvalue: supports 1 <= N <= 64, got N=" +
                          std::to_string(n));
    require_dim(p, scale, "gram_min_eigenvalue");
    if (scale.mode() == CapScaleMode::McOnly)
        throw DomainError("gram_min_eigenvalue: no kernel closed form for mc-only scales");

    const bool hemisphere = scale.mode() == CapScaleMode::Hemisphere;
    const double coeff = hemisphere ? 0.0 : scale.constants().c_d / scale.alpha();
    std::vector<double> g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        g[static_cast<std::size_t>(i) * n + i] = 1.0;
        for (int j = i + 1; j < n; ++j) {
            const double u = unit_dot(p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(j)]);
            const double v = hemisphere ? 1.0 - std::acos(u) / kPi
                                        : 1.0 - coeff * std::sqrt(2.0 * (1.0 - u));
            g[static_cast<std::size_t>(i) * n + j] = v;
            g[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return symmetric_min_eigenvalue(std::move(g), n);
}

double distance_series_partial(double inner, int terms) {
    if (!(inner >= -1.0 && inner <= 1.0))
        throw DomainError("distance_series_partial: requires inner in [-1, 1]");
    if (terms < 1) throw DomainError("distance_series_partial: requires terms >= 1");
    KahanSum sum;
    sum.add(1.0);
    double upow = 1.0;
    for (int l = 1; l <= terms; ++l) {
        upow *= inner;
        if (upow == 0.0) break;
        // |(-1/2)_l| = (1/2) (1/2)_{l-1}; the sign of every l >= 1 term is -1.
        const double log_abs = kLnHalf + specfun::log_pochhammer(0.5, l - 1) -
                               specfun::log_gamma(static_cast<double>(l) + 1.0);
        sum.add(-std::exp(log_abs) * upow);
    }
    return sum.value();
}

double moment_integral(int d, int r) {
    if (d < 1) throw DomainError("moment_integral: requires d >= 1");
    if (r < 1) throw DomainError("moment_integral: requires r >= 1");
    return std::exp(specfun::log_pochhammer(0.5, r) -
                    specfun::log_pochhammer(0.5 * (d + 1), r));
}

double series_tail_lower(int m) {
    if (m < 1) throw DomainError("series_tail_lower: requires m >= 1");
    return 1.0 / (kTwoSqrt2Pi * std::sqrt(static_cast<double>(m)));
}

double stolarsky_lower_bound(int d, double alpha, std::int64_t n) {
    if (d < 1) throw DomainError("stolarsky_lower_bound: requires d >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("stolarsky_lower_bound: requires alpha in (0, 1]");
    if (n < 1) throw DomainError("stolarsky_lower_bound: requires n >= 1");
    const SphereConstants k = compute_constants(d);
    const double dd = static_cast<double>(d);
    return k.cdid / alpha * (k.f_star / kTwoSqrt2Pi) *
           std::pow(static_cast<double>(n), -(dd + 1.0) / dd);
}

}  // namespace sphcap
