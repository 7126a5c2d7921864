#pragma once

#include <string>
#include <vector>

#include "polyflow/multipoly.hpp"

namespace polyflow {

/// Per-degree class counts (omega_1, ..., omega_b) of a family; the top slot
/// omega_b is always populated.
struct WeightVector {
  std::vector<long> counts;  // counts[i] = classes of degree i+1
  int degree() const { return static_cast<int>(counts.size()); }
  bool operator==(const WeightVector& o) const { return counts == o.counts; }
  std::string str() const;
};

// True iff deg p = deg q and deg(p - q) < deg p. Any two constants compare
// equivalent. Transitive within a fixed degree.
bool equivalent(const MultiPoly& p, const MultiPoly& q);

// Requires every member non-constant. Classes are the transitive closure of
// `equivalent` within each degree (union-find).
WeightVector weight_vector(const PolyFamily& family);

// Degree first, then right-aligned lexicographic: compare from the top
// degree down, first difference decides.
bool weight_less(const WeightVector& a, const WeightVector& b);

// Nice: members non-constant and pairwise differences non-constant.
bool is_nice(const PolyFamily& family);
// Standard: nice and the first member attains the family degree.
bool is_standard(const PolyFamily& family);

}  // namespace polyflow
