#pragma once

#include <vector>

namespace sphcap {

// Eigenvalues of a dense symmetric matrix (row-major n*n) by cyclic Jacobi
// sweeps; the input is consumed. Intended for the small Gram matrices used
// here (n <= 64); accurate to ~n * 1e-15 * ||A||.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n);

double symmetric_min_eigenvalue(std::vector<double> a, int n);

}  // namespace sphcap
