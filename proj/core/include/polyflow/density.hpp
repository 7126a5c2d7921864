#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polyflow/complexity.hpp"
#include "polyflow/intervals.hpp"
#include "polyflow/multipoly.hpp"

namespace polyflow {

/// Window-density estimate m(E ∩ [M, M+L)) / L, maximized over window
/// starts. Exact (and start-independent) for periodic sets when L is a
/// multiple of the period.
struct DensityEstimate {
  Rational window_length{0};
  Rational best_start{0};
  Rational value{0};
  bool exact = false;
  // value per window length, for trend inspection over increasing L
  std::vector<std::pair<Rational, Rational>> trend;
};

struct MGrid {
  Rational start{0};
  Rational step{1};
  long count = 1;
};

DensityEstimate upper_density(const IntervalSet& e, const Rational& window_length,
                              const MGrid& starts);

// Monotone-refined estimate over increasing window lengths; flags (by
// leaving exact=false and filling trend) when the values have not settled.
DensityEstimate upper_density_trend(const IntervalSet& e,
                                    const std::vector<Rational>& window_lengths,
                                    const MGrid& starts);

// Density of E_delta ∩ (E_delta - p_1(s)) ∩ ... ∩ (E_delta - p_k(s)).
// delta = 0 is accepted as an experimental mode (no thickening).
// The family must be tau-free so translation amounts are exact.
DensityEstimate return_density(const IntervalSet& e, const Rational& delta,
                               const PolyFamily& family,
                               const std::vector<Rational>& s,
                               const Rational& window_length, const MGrid& starts);

/// Grid scan for bounded gaps of the good set
/// {s : return density > D*(E)^{k+1} - epsilon}.
struct GapReport {
  Rational s_max{0};
  Rational step{1};
  Rational threshold{0};
  Rational dstar{0};
  bool dstar_exact = false;
  long good_count = 0;
  long grid_count = 0;
  std::vector<Rational> good_sample;  // first few good grid points
  std::optional<Rational> max_gap;    // absent when the good set is empty
  // hypothesis gate
  int complexity_bound = -1;
  bool certified_low_complexity = false;  // family bound <= 1
  bool progression_shape = false;         // {l p, m p, (l+m) p} (bound 2 allowed)
  bool hypothesis_certified = false;
  bool delta_zero_mode = false;
  std::string note;
};

// Detects the arithmetic-progression family shape {l p, m p, (l+m) p}.
bool progression_family_shape(const PolyFamily& family);

GapReport syndetic_scan(const IntervalSet& e, const Rational& delta,
                        const PolyFamily& family, const Rational& epsilon,
                        const Rational& s_max, const Rational& step,
                        const Rational& window_length, const MGrid& starts,
                        int complexity_budget = kDefaultSearchBudget);

}  // namespace polyflow
