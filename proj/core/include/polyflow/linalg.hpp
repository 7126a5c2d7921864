#pragma once

#include <optional>
#include <vector>

#include "polyflow/coeff.hpp"

namespace polyflow {

using CoeffMatrix = std::vector<std::vector<Coeff>>;  // row-major

CoeffMatrix mat_identity(int n);
CoeffMatrix mat_mul(const CoeffMatrix& a, const CoeffMatrix& b);

// Fraction-free (Bareiss) elimination. Exact over the Laurent-polynomial
// ring: every division along the way is by a previous pivot and stays in
// the ring.
int ff_rank(CoeffMatrix m);
Coeff ff_det(const CoeffMatrix& m);

// Solves A x = b for the unique solution of a full-column-rank system
// (consistency of extra rows is verified). Returns nullopt when the system
// is inconsistent or the solution leaves the coefficient ring (a genuine
// fraction in tau).
std::optional<std::vector<Coeff>> ff_solve(const CoeffMatrix& a,
                                           const std::vector<Coeff>& b);

// Inverse with entries in the ring; nullopt when singular or when any entry
// of adj(A)/det(A) is not ring-exact.
std::optional<CoeffMatrix> ff_inverse(const CoeffMatrix& m);

// A vector v with M^T v = 0, v != 0, scaled into the ring, for a rank-
// deficient set of rows; nullopt when rows are independent.
std::optional<std::vector<Coeff>> ff_left_kernel_vector(const CoeffMatrix& rows);

}  // namespace polyflow
