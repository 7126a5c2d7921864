#pragma once

#include <string>
#include <vector>

#include "polyflow/multipoly.hpp"

namespace polyflow {

/// Numeric polynomial for the dynamics layer: exact coefficients are lowered
/// to doubles at this boundary (tau -> pi).
struct RealPoly {
  int d = 1;
  std::vector<std::pair<std::vector<int>, double>> terms;

  static RealPoly from(const MultiPoly& p, double tau_value);
  static RealPoly monomial(int d, const std::vector<int>& exps, double c);

  double eval(const std::vector<double>& s) const;
  bool is_constant() const;
  int degree() const;
  std::string str() const;
};

std::vector<RealPoly> lower_family(const PolyFamily& family, double tau_value);

}  // namespace polyflow
