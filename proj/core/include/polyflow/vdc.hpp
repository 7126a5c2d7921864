#pragma once

#include "polyflow/observables.hpp"
#include "polyflow/realpoly.hpp"
#include "polyflow/sampling.hpp"

namespace polyflow {

/// Finite-R margin of the averaging inequality
///   ||avg_s g_s||^2  <=  (1/|Psi|^2) int_Psi int_Psi |avg_s <g_{s+u}, g_{s+v}>|
/// for g_s(x) = prod_j f_j(x + p_j(s) gamma).
struct VdcReport {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;  // rhs - lhs
  double slack = 0.05;
  bool pass = false;
};

// psi_extent: Psi = [0, psi_extent]^d, discretized with psi_grid midpoints
// per axis.
VdcReport vdc_check(const TorusFlow& flow, const std::vector<RealPoly>& family,
                    const std::vector<TrigPoly>& fs, double psi_extent, int psi_grid,
                    const SamplingPlan& plan, double slack = 0.05);

}  // namespace polyflow
