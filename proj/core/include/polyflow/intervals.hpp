#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "polyflow/rational.hpp"

namespace polyflow {

/// Half-open interval [lo, hi) with exact rational endpoints.
struct Interval {
  Rational lo, hi;
  bool operator==(const Interval& o) const { return lo == o.lo && hi == o.hi; }
};

/// Finite union of disjoint half-open intervals, optionally a periodic set
/// described by a template inside [0, period). All set algebra is exact.
class IntervalSet {
 public:
  IntervalSet() = default;

  // Normalizes: sorts, merges overlapping/touching intervals, drops empties.
  static IntervalSet of(std::vector<Interval> parts);
  static IntervalSet periodic(const Rational& period, std::vector<Interval> tmpl);

  bool is_periodic() const { return periodic_; }
  const Rational& period() const { return period_; }
  const std::vector<Interval>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }

  // Finite restriction to [lo, hi); periodic sets are unrolled lazily.
  IntervalSet materialize(const Rational& lo, const Rational& hi) const;

  IntervalSet translate(const Rational& v) const;
  // Open delta-neighborhood, stored half-open (same measure). delta > 0.
  IntervalSet thicken(const Rational& delta) const;

  Rational measure() const;  // finite sets only
  Rational measure_in(const Rational& lo, const Rational& hi) const;

  static IntervalSet union_(const IntervalSet& a, const IntervalSet& b);
  static IntervalSet intersect(const IntervalSet& a, const IntervalSet& b);
  // Periodic-aware intersection: sets sharing a period intersect into a
  // periodic set; mixed cases require a window via materialize().
  static IntervalSet intersect_periodic(const std::vector<IntervalSet>& sets);

  bool contains_set(const IntervalSet& other) const;  // finite both

  // Text format: one "a,b" line per interval, optional "period=q" header.
  static IntervalSet parse(std::istream& in);
  static IntervalSet parse_text(const std::string& text);
  std::string str() const;

 private:
  bool periodic_ = false;
  Rational period_{0};
  std::vector<Interval> parts_;  // template within [0, period) when periodic

  static std::vector<Interval> normalize(std::vector<Interval> parts);
  std::vector<Interval> fold_into_period(const std::vector<Interval>& parts) const;
};

}  // namespace polyflow
