#include "sphcap/complexity.hpp"

#include <cmath>
#include <limits>

#include "sphcap/constants.hpp"
#include "sphcap/errors.hpp"

namespace sphcap {

namespace {

constexpr double kPi = 3.1415926535897932384626433832795;
constexpr double kSqrt2 = 1.4142135623730950488016887242097;
constexpr double kSqrt2Pi = 2.5066282746310005024157652848110;

void require_epsilon(double epsilon) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw DomainError("requires epsilon in (0, 1), got epsilon=" +
                          std::to_string(epsilon));
}

std::int64_t checked_ceil(double v, const char* what) {
    const double c = std::ceil(v);
    if (!(c >= 1.0) || c > 9.0e18)
        throw DomainError(std::string(what) + ": bound " + std::to_string(v) +
                          " is outside the representable integer range");
    return static_cast<std::int64_t>(c);
}

}  // namespace

GFamily GFamily::classical() { return GFamily(Kind::Classical, 0.0); }
GFamily GFamily::sqrt2cd() { return GFamily(Kind::Sqrt2Cd, 0.0); }

GFamily GFamily::eta_cd(double eta) {
    if (!(eta > kSqrt2 && eta <= kSqrt2Pi))
        throw DomainError("GFamily::eta_cd: requires eta in (sqrt(2), sqrt(2 pi)], got eta=" +
                          std::to_string(eta));
    return GFamily(Kind::EtaCd, eta);
}

GFamily GFamily::poly_decay(double delta) {
    if (!(delta > 0.0))
        throw DomainError("GFamily::poly_decay: requires delta > 0");
    return GFamily(Kind::PolyDecay, delta);
}

GFamily GFamily::exp_decay(double a) {
    if (!(a > 0.0 && a < 1.0))
        throw DomainError("GFamily::exp_decay: requires a in (0, 1)");
    return GFamily(Kind::ExpDecay, a);
}

GFamily GFamily::constant(double c) {
    if (!(c > 0.0 && c < 1.0))
        throw DomainError("GFamily::constant: requires c in (0, 1)");
    return GFamily(Kind::Constant, c);
}

std::string GFamily::name() const {
    switch (kind_) {
        case Kind::Classical: return "classical";
        case Kind::Sqrt2Cd: return "sqrt2cd";
        case Kind::EtaCd: return "eta:" + std::to_string(param_);
        case Kind::PolyDecay: return "g-poly:" + std::to_string(param_);
        case Kind::ExpDecay: return "g-exp:" + std::to_string(param_);
        case Kind::Constant: return "g-const:" + std::to_string(param_);
    }
    return "?";
}

std::int64_t inverse_upper_classical(double epsilon, int d) {
    require_epsilon(epsilon);
    if (d < 1) throw DomainError("inverse_upper_classical: requires d >= 1");
    const double denom = std::sqrt(kPi * static_cast<double>(d)) - 1.0;
    return checked_ceil(1.0 / (epsilon * epsilon) / denom, "inverse_upper_classical");
}

BoundsResult inverse_bounds(double epsilon, int d, double alpha) {
    require_epsilon(epsilon);
    if (d < 1) throw DomainError("inverse_bounds: requires d >= 1");
    const SphereConstants k = compute_constants(d);
    if (!(alpha > k.cdid))
        throw DomainError("inverse_bounds: normalization undefined, requires alpha > C_d I_d = " +
                          std::to_string(k.cdid) + ", got alpha=" + std::to_string(alpha));
    if (!(alpha <= 1.0))
        throw DomainError("inverse_bounds: requires alpha <= 1");
    const double ratio = k.cdid / (alpha - k.cdid);
    const double inv_eps2 = 1.0 / (epsilon * epsilon);
    BoundsResult r;
    r.d = d;
    r.epsilon = epsilon;
    r.alpha = alpha;
    r.upper = checked_ceil(inv_eps2 * ratio, "inverse_bounds");
    const double dd = static_cast<double>(d);
    r.lower = 0.125 * std::pow(inv_eps2 * ratio / std::sqrt(dd), dd / (dd + 1.0));
    return r;
}

double g_value(const GFamily& family, int d) {
    if (d < 1) throw DomainError("g_value: requires d >= 1");
    switch (family.kind()) {
        case GFamily::Kind::Classical: return 1.0 - compute_constants(d).cdid;
        case GFamily::Kind::Sqrt2Cd: return 1.0 - compute_constants(d).i_d / kSqrt2;
        case GFamily::Kind::EtaCd: return 1.0 - compute_constants(d).i_d / family.param();
        case GFamily::Kind::PolyDecay: return std::pow(static_cast<double>(d), -family.param());
        case GFamily::Kind::ExpDecay: return std::pow(family.param(), static_cast<double>(d));
        case GFamily::Kind::Constant: return family.param();
    }
    throw InternalError("g_value: unhandled family kind");
}

double alpha_from_g(const GFamily& family, int d) {
    if (d < 1) throw DomainError("alpha_from_g: requires d >= 1");
    const SphereConstants k = compute_constants(d);
    double alpha = 0.0;
    switch (family.kind()) {
        case GFamily::Kind::Classical: alpha = 1.0; break;
        case GFamily::Kind::Sqrt2Cd: alpha = kSqrt2 * k.c_d; break;
        case GFamily::Kind::EtaCd: alpha = family.param() * k.c_d; break;
        default: {
            const double g = g_value(family, d);
            if (!(g > 0.0 && g < 1.0))
                throw DomainError("alpha_from_g: g(" + std::to_string(d) + ") = " +
                                  std::to_string(g) + " is outside (0, 1)");
            alpha = k.cdid / (1.0 - g);
        }
    }
    if (!(alpha > k.cdid && alpha <= 1.0))
        throw DomainError("alpha_from_g: derived alpha = " + std::to_string(alpha) +
                          " falls outside (C_d I_d, 1] at d = " + std::to_string(d));
    return alpha;
}

double expected_random_sq(int d, std::int64_t n, double alpha) {
    if (d < 1) throw DomainError("expected_random_sq: requires d >= 1");
    if (n < 1) throw DomainError("expected_random_sq: requires n >= 1");
    if (!(alpha > 0.0 && alpha <= 1.0))
        throw DomainError("expected_random_sq: requires alpha in (0, 1]");
    return compute_constants(d).cdid / (alpha * static_cast<double>(n));
}

std::vector<SweepRow> sweep(const GFamily& family, const std::vector<int>& d_values,
                            double epsilon) {
    require_epsilon(epsilon);
    std::vector<SweepRow> rows;
    rows.reserve(d_values.size());
    for (int d : d_values) {
        SweepRow row;
        row.d = d;
        row.epsilon = epsilon;
        try {
            row.alpha = alpha_from_g(family, d);
            row.g = g_value(family, d);
            const BoundsResult b = inverse_bounds(epsilon, d, row.alpha);
            row.lower = b.lower;
            row.upper = b.upper;
            row.ok = true;
        } catch (const DomainError& e) {
            row.ok = false;
            row.flag = e.what();
            row.alpha = std::numeric_limits<double>::quiet_NaN();
            row.g = std::numeric_limits<double>::quiet_NaN();
            row.lower = std::numeric_limits<double>::quiet_NaN();
            row.upper = 0;
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace sphcap
