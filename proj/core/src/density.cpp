#include "polyflow/density.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyflow {

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational acc(1);
  for (int i = 0; i < e; ++i) acc *= base;
  return acc;
}

bool periodic_multiple(const IntervalSet& e, const Rational& window) {
  if (!e.is_periodic()) return false;
  Rational q = window / e.period();
  return q == q.floor();
}

Rational periodic_density(const IntervalSet& e) {
  Rational m(0);
  for (const auto& iv : e.parts()) m += iv.hi - iv.lo;
  return m / e.period();
}

}  // namespace

DensityEstimate upper_density(const IntervalSet& e, const Rational& window_length,
                              const MGrid& starts) {
  if (!(Rational(0) < window_length))
    throw std::invalid_argument("upper_density: window length must be positive");
  DensityEstimate out;
  out.window_length = window_length;
  if (periodic_multiple(e, window_length)) {
    out.value = periodic_density(e);
    out.best_start = starts.start;
    out.exact = true;
    return out;
  }
  Rational best(-1);
  Rational best_m(0);
  for (long i = 0; i < starts.count; ++i) {
    Rational m = starts.start + Rational(i) * starts.step;
    Rational v = e.measure_in(m, m + window_length) / window_length;
    if (best < v) {
      best = v;
      best_m = m;
    }
  }
  out.value = best;
  out.best_start = best_m;
  return out;
}

DensityEstimate upper_density_trend(const IntervalSet& e,
                                    const std::vector<Rational>& window_lengths,
                                    const MGrid& starts) {
  if (window_lengths.empty())
    throw std::invalid_argument("upper_density_trend: no window lengths");
  DensityEstimate out;
  std::vector<std::pair<Rational, Rational>> trend;
  for (const auto& len : window_lengths) {
    out = upper_density(e, len, starts);
    trend.emplace_back(len, out.value);
  }
  out.trend = std::move(trend);
  return out;
}

DensityEstimate return_density(const IntervalSet& e, const Rational& delta,
                               const PolyFamily& family,
                               const std::vector<Rational>& s,
                               const Rational& window_length, const MGrid& starts) {
  if (delta < Rational(0))
    throw std::invalid_argument("return_density: delta must be >= 0");
  IntervalSet fat = delta.is_zero() ? e : e.thicken(delta);

  std::vector<IntervalSet> sets;
  sets.push_back(fat);
  for (const auto& p : family.polys) {
    auto shift = p.eval_rational(s);
    if (!shift)
      throw std::domain_error(
          "return_density: family has pi-coefficients; exact translation "
          "undefined (lower to rationals first)");
    sets.push_back(fat.translate(-*shift));
  }

  bool all_periodic_same = fat.is_periodic();
  for (const auto& t : sets)
    all_periodic_same = all_periodic_same && t.is_periodic() &&
                        t.period() == fat.period();
  if (all_periodic_same) {
    IntervalSet inter = IntervalSet::intersect_periodic(sets);
    DensityEstimate out;
    out.window_length = window_length;
    out.value = inter.empty() ? Rational(0) : periodic_density(inter);
    out.exact = true;
    return out;
  }

  // materialize over the scanned window plus margin and intersect finitely
  Rational lo = starts.start;
  Rational hi = starts.start + Rational(starts.count) * starts.step + window_length;
  IntervalSet acc = sets[0].materialize(lo, hi);
  for (size_t i = 1; i < sets.size(); ++i)
    acc = IntervalSet::intersect(acc, sets[i].materialize(lo, hi));
  return upper_density(acc, window_length, starts);
}

bool progression_family_shape(const PolyFamily& family) {
  if (family.size() != 3) return false;
  const auto& p = family.polys;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      if (a == b) continue;
      int c = 3 - a - b;
      if (p[a].is_zero() || p[b].is_zero() || p[a].is_constant()) continue;
      if (!(p[a] + p[b] == p[c])) continue;
      if (p[a].positive_ratio_to(p[b])) return true;
    }
  return false;
}

GapReport syndetic_scan(const IntervalSet& e, const Rational& delta,
                        const PolyFamily& family, const Rational& epsilon,
                        const Rational& s_max, const Rational& step,
                        const Rational& window_length, const MGrid& starts,
                        int complexity_budget) {
  if (family.d != 1)
    throw std::invalid_argument("syndetic_scan: scan grid is one-parameter");
  for (const auto& p : family.polys)
    if (!p.constant_term().is_zero())
      throw std::invalid_argument(
          "syndetic_scan: family with nonzero constant terms rejected");

  GapReport rep;
  rep.s_max = s_max;
  rep.step = step;
  rep.delta_zero_mode = delta.is_zero();
  if (rep.delta_zero_mode)
    rep.note = "delta=0 experimental mode: thickening skipped, no guarantee applies";

  // hypothesis gate: the bounded-gap statement is certified for complexity
  // <= 1 and for the progression shape {l p, m p, (l+m) p}
  rep.progression_shape = progression_family_shape(family);
  try {
    FamilyComplexityReport cx = family_complexity_bounds(family, complexity_budget);
    rep.complexity_bound = cx.family_bound;
    rep.certified_low_complexity = cx.family_bound <= 1;
  } catch (const std::exception& ex) {
    rep.complexity_bound = -1;
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += std::string("complexity analysis unavailable: ") + ex.what();
  }
  rep.hypothesis_certified = rep.certified_low_complexity || rep.progression_shape;
  if (!rep.hypothesis_certified) {
    if (!rep.note.empty()) rep.note += "; ";
    rep.note +=
        "bounded-gap hypothesis not certified (complexity bound > 1 and not a "
        "progression shape); scan is exploratory";
  }

  // D*(E): exact for periodic sets, window estimate otherwise
  if (e.is_periodic()) {
    rep.dstar = periodic_density(e);
    rep.dstar_exact = true;
  } else {
    DensityEstimate d = upper_density(e, window_length, starts);
    rep.dstar = d.value;
    rep.dstar_exact = d.exact;
  }
  const int k = family.size();
  rep.threshold = rational_pow(rep.dstar, k + 1) - epsilon;

  std::vector<Rational> good;
  long grid_count = 0;
  for (Rational s(0); !(s_max < s); s += step) {
    ++grid_count;
    DensityEstimate d = return_density(e, delta, family, {s}, window_length, starts);
    if (rep.threshold < d.value) good.push_back(s);
  }
  rep.grid_count = grid_count;
  rep.good_count = static_cast<long>(good.size());
  for (size_t i = 0; i < good.size() && i < 32; ++i) rep.good_sample.push_back(good[i]);

  if (!good.empty()) {
    Rational max_gap = good.front();  // leading gap from 0
    for (size_t i = 1; i < good.size(); ++i)
      max_gap = std::max(max_gap, good[i] - good[i - 1]);
    max_gap = std::max(max_gap, s_max - good.back());  // trailing gap
    if (max_gap.is_zero()) max_gap = step;              // every grid point good
    rep.max_gap = max_gap;
  }
  return rep;
}

}  // namespace polyflow
