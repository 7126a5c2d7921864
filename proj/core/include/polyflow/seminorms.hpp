#pragma once

#include <string>

#include "polyflow/observables.hpp"
#include "polyflow/realpoly.hpp"
#include "polyflow/sampling.hpp"

namespace polyflow {

struct SeminormValue {
  int k = 1;
  double value = 0.0;
  enum class Method { closed_form, recursion } method = Method::closed_form;
  long N = 0;  // recursion truncation
};

// k-th seminorm of a trigonometric polynomial under an ergodic torus
// rotation. The value is direction-independent; the closed form is the exact
// limit evaluated through the Fourier coefficients:
//   k = 1: |c_0|
//   k = 2: (sum |c_n|^4)^{1/4}
//   k = 3: explicit correlation-convolution formula
//   k >= 4: one averaging level resolved by rectangle quadrature (exact for
//           trig polynomials), recursing on k-1.
double hk_seminorm_closed(const TrigPoly& f, int k);

// Finite-N truncation of the defining recursion using the time-1 map of the
// rotation by gamma (complex functions pair conj(f) with T^n f). gamma must
// be irrational coordinatewise; converges to the closed form as N grows.
double hk_seminorm_recursion(const TrigPoly& f, int k, const std::vector<double>& gamma,
                             long N);

SeminormValue hk_seminorm(const TrigPoly& f, int k, SeminormValue::Method method,
                          const std::vector<double>& gamma = {1.4142135623730951},
                          long N = 500);

/// Finite-R check of the seminorm domination of multiparameter averages
/// along a nice linear family: L2-over-x norm of the average against
/// min_l ||f_l||_k plus slack.
struct SeminormBoundReport {
  double average_norm = 0.0;
  double min_seminorm = 0.0;
  double slack = 0.05;
  int k = 1;
  bool pass = false;
};

SeminormBoundReport seminorm_bound_check(const TorusFlow& flow,
                                         const std::vector<RealPoly>& linear_family,
                                         const std::vector<TrigPoly>& fs,
                                         const SamplingPlan& plan, int k,
                                         double slack = 0.05);

}  // namespace polyflow
