#include "sphcap/specfun.hpp"

#include <cmath>
#include <string>

#include "sphcap/errors.hpp"

namespace sphcap::specfun {

double log_gamma(double x) {
    if (!std::isfinite(x) || x <= 0.0)
        throw DomainError("log_gamma: requires finite x > 0, got x=" + std::to_string(x));
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}

namespace {

// Lentz continued fraction for the incomplete beta, used on the side
// x <= (a+1)/(a+b+2) where it converges fastest.
double beta_cf(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr int kMaxIter = 2000;
    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::abs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const double m2 = 2.0 * m;
        double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::abs(d) < kTiny) d = kTiny;
        c = 1.0 + aa / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 3e-16) return h;
    }
    throw InternalError("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double a, double b, double x) {
    if (!std::isfinite(a) || a <= 0.0 || !std::isfinite(b) || b <= 0.0)
        throw DomainError("regularized_incomplete_beta: requires a > 0 and b > 0");
    if (!(x >= 0.0 && x <= 1.0))
        throw DomainError("regularized_incomplete_beta: requires x in [0, 1], got x=" +
                          std::to_string(x));
    if (x == 0.0) return 0.0;
    if (x == 1.0) return 1.0;
    const double log_bt = log_gamma(a + b) - log_gamma(a) - log_gamma(b) +
                          a * std::log(x) + b * std::log1p(-x);
    const double bt = std::exp(log_bt);
    if (x < (a + 1.0) / (a + b + 2.0))
        return bt * beta_cf(a, b, x) / a;
    return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

double log_pochhammer(double a, long long n) {
    if (!std::isfinite(a) || a <= 0.0)
        throw DomainError("log_pochhammer: requires a > 0, got a=" + std::to_string(a));
    if (n < 0)
        throw DomainError("log_pochhammer: requires n >= 0, got n=" + std::to_string(n));
    if (n == 0) return 0.0;
    return log_gamma(a + static_cast<double>(n)) - log_gamma(a);
}

}  // namespace sphcap::specfun
