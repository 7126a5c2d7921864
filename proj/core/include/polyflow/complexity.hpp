#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyflow/decompose.hpp"

namespace polyflow {

inline constexpr int kDefaultSearchBudget = 10000;

enum class BoundRule { prop59, cor56, cor58 };
std::string bound_rule_name(BoundRule r);

/// One substitution step: gamma is the distinguished first column of B; the
/// remaining columns are standard basis vectors completing an invertible B.
struct Substitution {
  std::vector<Coeff> gamma;
  CoeffMatrix b;
  Coeff det;
};

/// Replayable record of how one member's bound was derived. For rule prop59
/// the distinguished column of the resulting family satisfies p_j(gamma) != 0
/// and (p_i - p_j)(gamma) != 0 for i != j, and bound = |Lambda1| - 1.
struct ComplexityCertificate {
  int j = 0;         // 1-based member index
  int bound = 0;
  BoundRule rule = BoundRule::cor56;
  std::vector<Substitution> substitutions;
  std::string linearized;  // canonical print of the linearized family
  std::string resulting;   // canonical print after the substitution chain
  int lambda1_before = 0;  // |Lambda1| of column 1 before substitution
  int lambda1_after = 0;   // |Lambda1| of the distinguished column after
  bool fallback = false;   // search exhausted, k-1 cap reported
};

/// Per-member bounds plus the family-level maximum. `exact` only when the
/// bound is 0 (equivalent to R-independence); nonzero values are upper
/// bounds — whether they are attained is open.
struct FamilyComplexityReport {
  std::string family;
  CoefficientMatrix linearization;
  std::vector<ComplexityCertificate> per_j;
  int family_bound = 0;
  bool exact = false;
  bool independent = false;
};

// Exact complexity-0 test: a nice family has complexity 0 iff it is
// R-independent. Throws on non-nice input.
bool complexity_zero(const PolyFamily& family);

// Distinct nonzero coefficients of one column of a linear family.
std::vector<Coeff> lambda1(const PolyFamily& linear_family, int col /*1-based*/);

// |Lambda1(col)| - 1 when member j's coefficient in `col` is nonzero and
// distinct from every other member's; absent otherwise.
std::optional<int> pj_bound_direct(const PolyFamily& linear_family,
                                   int j /*1-based*/, int col /*1-based*/);

// Linearizes, then searches substitution columns gamma over small exact
// vectors ({-1,0,1}^l, {-2..2}^l, per-component {1,tau,1/tau} scalings,
// rational scalings) minimizing |Lambda1|. Falls back to the k-1 cap when
// the budget is exhausted without a valid column.
ComplexityCertificate pj_bound_search(const PolyFamily& family, int j /*1-based*/,
                                      int budget = kDefaultSearchBudget);

FamilyComplexityReport family_complexity_bounds(const PolyFamily& family,
                                                int budget = kDefaultSearchBudget);

// Re-applies the substitution chain and re-derives the bound; false with a
// reason when any recorded intermediate fails to reproduce.
bool replay_certificate(const ComplexityCertificate& cert, const PolyFamily& family,
                        std::string* why = nullptr);

}  // namespace polyflow
