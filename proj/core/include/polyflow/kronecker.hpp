#pragma once

#include <optional>

#include "polyflow/decompose.hpp"
#include "polyflow/observables.hpp"

namespace polyflow {

struct KroneckerResult {
  Complex quadrature{0.0, 0.0};
  // Exact frequency-matching value; present when every observable is a
  // trigonometric polynomial.
  std::optional<Complex> closed_form;
  long quadrature_points = 0;
};

// Limit of the multiparameter average through the rotation factor:
// integral over (u_1,...,u_l) in (T^m)^l of prod_j f_j(x + sum_i a_{j,i} u_i).
// The quadrature uses `resolution` points per scalar axis (exact for trig
// polynomials with frequencies below resolution/2; valid when the rotation
// direction is ergodic).
//
// The closed form keeps a term (n_1,...,n_k) iff for every i the combination
// sum_j a_{j,i} n_j vanishes: tested exactly in the coefficient ring when no
// direction is supplied (componentwise), or numerically as
// sum_j a_{j,i} (n_j . gamma) = 0 when the concrete direction gamma is given
// (this also covers non-ergodic product constructions).
KroneckerResult kronecker_limit(const CoefficientMatrix& a,
                                const std::vector<Observable>& fs, const Point& x,
                                int resolution,
                                const std::optional<std::vector<double>>& gamma =
                                    std::nullopt,
                                double tau_value = 3.14159265358979323846);

}  // namespace polyflow
