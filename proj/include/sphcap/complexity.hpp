#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sphcap {

// Normalization family g(d) in (0, 1) selecting the cap scale
// alpha_d = C_d I_d / (1 - g(d)); the initial squared discrepancy is then
// g(d). Classical, Sqrt2Cd and EtaCd fix alpha directly instead.
class GFamily {
public:
    enum class Kind { Classical, Sqrt2Cd, EtaCd, PolyDecay, ExpDecay, Constant };

    static GFamily classical();                // alpha = 1
    static GFamily sqrt2cd();                  // alpha = sqrt(2) C_d
    static GFamily eta_cd(double eta);         // alpha = eta C_d, eta in (sqrt2, sqrt(2 pi)]
    static GFamily poly_decay(double delta);   // g(d) = d^-delta, delta > 0
    static GFamily exp_decay(double a);        // g(d) = a^d, a in (0, 1)
    static GFamily constant(double c);         // g(d) = c, c in (0, 1)

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    std::string name() const;

private:
    GFamily(Kind kind, double param) : kind_(kind), param_(param) {}
    Kind kind_;
    double param_;
};

struct BoundsResult {
    int d = 0;
    double epsilon = 0.0;
    double alpha = 0.0;
    double lower = 0.0;        // real-valued, not ceiled
    std::int64_t upper = 0;
};

// ceil((1/eps^2) / (sqrt(pi d) - 1)): point-count upper bound for reducing
// the classical discrepancy to an eps fraction of its initial value.
// Non-increasing in d for fixed eps.
std::int64_t inverse_upper_classical(double epsilon, int d);

// Two-sided information-complexity bounds for the alpha-scaled problem:
//   upper = ceil((1/eps^2) * C_d I_d / (alpha - C_d I_d))
//   lower = (1/8) * ((1/sqrt(d)) (1/eps^2) C_d I_d / (alpha - C_d I_d))^{d/(d+1)}
// Throws DomainError when alpha <= C_d I_d (normalization undefined).
BoundsResult inverse_bounds(double epsilon, int d, double alpha);

// g(d) for the family (the initial squared discrepancy implied by it).
double g_value(const GFamily& family, int d);

// Resolves the family to alpha_d and validates alpha_d in (C_d I_d, 1].
double alpha_from_g(const GFamily& family, int d);

// C_d I_d / (alpha n): exact expectation of the squared alpha-scaled
// discrepancy of n i.i.d. uniform points.
double expected_random_sq(int d, std::int64_t n, double alpha);

struct SweepRow {
    int d = 0;
    double epsilon = 0.0;
    double alpha = 0.0;
    double g = 0.0;
    double lower = 0.0;
    std::int64_t upper = 0;
    bool ok = false;
    std::string flag;  // empty when ok; short reason otherwise
};

// One row per dimension, in input order. Rows whose alpha_d falls outside
// (C_d I_d, 1] (or whose upper bound overflows int64) are flagged and their
// numeric columns left unset, never dropped silently.
std::vector<SweepRow> sweep(const GFamily& family, const std::vector<int>& d_values,
                            double epsilon);

}  // namespace sphcap
