#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyflow/linalg.hpp"
#include "polyflow/multipoly.hpp"

namespace polyflow {

struct IndependenceResult {
  bool independent = false;
  // Dependence vector w with sum_i w_i * (p_i - p_i(0)) = 0, scaled into the
  // coefficient ring; empty when independent.
  std::vector<Coeff> witness;
  std::string witness_str() const;
};

// Strips constant terms, stacks the coefficient vectors over the monomial
// support and computes the rank over Q(tau) by fraction-free elimination.
// Rank over R equals rank over Q(tau) because tau is transcendental.
IndependenceResult r_independent(const PolyFamily& family);

/// Exact decomposition p_j - p_j(0) = sum_i alpha[j][i] * basis[i] over a
/// greedily chosen (first-come) maximal R-independent subfamily.
struct CoefficientMatrix {
  int k = 0;               // members
  int l = 0;               // basis size
  CoeffMatrix alpha;       // k x l
  PolyFamily basis;        // l constant-free R-independent polynomials
  std::vector<int> basis_indices;      // positions in the input family
  std::vector<Coeff> stripped_constants;  // p_j(0), flagged when nonzero
  bool had_nonzero_constants = false;

  std::string str() const;
};

CoefficientMatrix independent_decomposition(const PolyFamily& family);

// The linear family {sum_i alpha[j][i] u_i} in l fresh variables. Shares all
// average-complexity behavior with the input.
PolyFamily linearize(const PolyFamily& family);
PolyFamily family_from_matrix(const CoeffMatrix& alpha);

// Coefficient rows of a family of linear forms (throws on nonlinear input).
CoeffMatrix linear_family_matrix(const PolyFamily& family);

// Substitutes u_i = sum_r B[i][r] v_r into a family of linear forms; the new
// coefficient matrix is A * B. Throws when B is singular.
PolyFamily change_of_variables(const PolyFamily& linear_family, const CoeffMatrix& b);

}  // namespace polyflow
