#pragma once

#include <string>

#include "polyflow/flows.hpp"
#include "polyflow/realpoly.hpp"
#include "polyflow/sampling.hpp"

namespace polyflow {

/// Box-count discrepancy of a polynomial path mod 1: max over dyadic cells
/// of depth 1..depth of |empirical fraction - cell volume|.
struct DiscrepancyReport {
  double discrepancy = 1.0;
  long samples = 0;
  int depth = 4;
  bool degenerate = false;  // collapsed sampling or rational-coefficient path
  std::string note;
};

DiscrepancyReport path_discrepancy(const std::vector<RealPoly>& path,
                                   const SamplingPlan& plan, int depth = 4);

/// Equidistribution of a_{p(s)} x on the Heisenberg manifold, split into the
/// base-torus discrepancy and the total-variation distance of the fiber
/// coordinate from uniform. Base equidistribution predicts the full one.
struct HeisenbergReport {
  double base_discrepancy = 1.0;
  double z_tv = 1.0;
  bool ergodic_base = false;
  bool degenerate = false;
  long samples = 0;
  std::string note;
};

HeisenbergReport heisenberg_factor_check(const HeisenbergFlow& flow, const RealPoly& p,
                                         const SamplingPlan& plan, int depth = 4,
                                         int z_bins = 16);

}  // namespace polyflow
