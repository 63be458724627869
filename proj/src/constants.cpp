#include "sphcap/constants.hpp"

#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "sphcap/errors.hpp"
#include "sphcap/specfun.hpp"

namespace sphcap {

namespace {

constexpr double kLogPi = 1.1447298858494001741434273513531;
constexpr double kLn2 = 0.69314718055994530941723212145818;

std::shared_mutex g_cache_mutex;
std::unordered_map<int, SphereConstants> g_cache;

}  // namespace

SphereConstants compute_constants_uncached(int d) {
    if (d < 1)
        throw DomainError("compute_constants: requires dimension d >= 1, got d=" +
                          std::to_string(d));
    const double dd = static_cast<double>(d);
    const double lg_half_next = specfun::log_gamma(0.5 * (dd + 1.0));
    SphereConstants k;
    k.d = d;
    k.log_c_d = lg_half_next - specfun::log_gamma(0.5 * dd) - 0.5 * kLogPi - std::log(dd);
    k.log_i_d = dd * kLn2 + 2.0 * lg_half_next - 0.5 * kLogPi -
                specfun::log_gamma(dd + 0.5);
    k.c_d = std::exp(k.log_c_d);
    k.i_d = std::exp(k.log_i_d);
    k.cdid = std::exp(k.log_c_d + k.log_i_d);
    k.f_star = std::exp(std::log(dd) - ((dd + 1.0) / dd) * std::log(dd + 1.0) +
                        (specfun::log_gamma(0.5) - lg_half_next) / dd);
    return k;
}

SphereConstants compute_constants(int d) {
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(d);
        if (it != g_cache.end()) return it->second;
    }
    SphereConstants k = compute_constants_uncached(d);
    {
        std::unique_lock lock(g_cache_mutex);
        g_cache.emplace(d, k);
    }
    return k;
}

double ratio_cdid(int d) {
    const double c = compute_constants(d).cdid;
    return c / (1.0 - c);
}

double lower_bound_proof_constant() {
    const double pi = 3.1415926535897932384626433832795;
    const double e = 2.7182818284590452353602874713527;
    auto f = [&](double d) {
        return std::pow(std::sqrt(2.0 * pi) / d * std::sqrt(1.0 + 1.0 / d), 1.0 / (d + 1.0));
    };
    auto h = [&](double d) {
        return std::exp(-1.0 / (6.0 * (d + 1.0) * (d + 1.0))) / std::pow(1.0 + 1.0 / d, 1.5);
    };
    return std::sqrt(e) / (2.0 * std::sqrt(pi)) * f(9.0) * h(1.0);
}

}  // namespace sphcap
