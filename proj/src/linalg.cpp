#include "sphcap/linalg.hpp"

#include <algorithm>
#include <cmath>

#include "sphcap/errors.hpp"

namespace sphcap {

namespace {

double off_diagonal_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += 2.0 * a[p * n + q] * a[p * n + q];
    return std::sqrt(s);
}

}  // namespace

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n) {
    if (n < 1) throw DomainError("symmetric_eigenvalues: requires n >= 1");
    if (a.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw DomainError("symmetric_eigenvalues: matrix size does not match n");
    double scale = 0.0;
    for (double v : a) scale = std::max(scale, std::abs(v));
    if (scale == 0.0) return std::vector<double>(static_cast<std::size_t>(n), 0.0);

    const double tol = 1e-15 * scale * n;
    for (int sweep = 0; sweep < 100; ++sweep) {
        if (off_diagonal_norm(a, n) <= tol) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (std::abs(apq) <= 1e-300) continue;
                const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = akp - s * (akq + tau * akp);
                    a[k * n + q] = akq + s * (akp - tau * akq);
                    a[p * n + k] = a[k * n + p];
                    a[q * n + k] = a[k * n + q];
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = a[i * n + i];
    std::sort(eig.begin(), eig.end());
    return eig;
}

double symmetric_min_eigenvalue(std::vector<double> a, int n) {
    return symmetric_eigenvalues(std::move(a), n).front();
}

}  // namespace sphcap
