#pragma once

#include <functional>

#include "polyflow/observables.hpp"
#include "polyflow/realpoly.hpp"
#include "polyflow/sampling.hpp"

namespace polyflow {

// Pointwise estimate at x of the multiparameter average of
// prod_j f_j(T_{p_j(s)} x) over [0,R_1] x ... x [0,R_d]. All-constant
// observable lists short-circuit to the exact product.
AverageEstimate multi_average(const Flow& flow, const std::vector<RealPoly>& family,
                              const std::vector<Observable>& fs, const Point& x,
                              const SamplingPlan& plan);

// L2-over-x variant: root mean square of |estimate(x) - reference(x)| over a
// uniform x-grid (grid_per_axis points per coordinate).
double multi_average_l2(const Flow& flow, const std::vector<RealPoly>& family,
                        const std::vector<Observable>& fs,
                        const std::function<Complex(const Point&)>& reference,
                        const SamplingPlan& plan, int grid_per_axis = 32);

}  // namespace polyflow
