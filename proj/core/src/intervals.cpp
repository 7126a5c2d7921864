#include "polyflow/intervals.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polyflow {

std::vector<Interval> IntervalSet::normalize(std::vector<Interval> parts) {
  std::vector<Interval> kept;
  for (auto& iv : parts) {
    if (iv.hi < iv.lo) throw std::invalid_argument("IntervalSet: inverted interval");
    if (iv.lo < iv.hi) kept.push_back(iv);
  }
  std::sort(kept.begin(), kept.end(),
            [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
  std::vector<Interval> out;
  for (auto& iv : kept) {
    if (!out.empty() && (iv.lo < out.back().hi || iv.lo == out.back().hi)) {
      if (out.back().hi < iv.hi) out.back().hi = iv.hi;
    } else {
      out.push_back(iv);
    }
  }
  return out;
}

IntervalSet IntervalSet::of(std::vector<Interval> parts) {
  IntervalSet s;
  s.parts_ = normalize(std::move(parts));
  return s;
}

std::vector<Interval> IntervalSet::fold_into_period(
    const std::vector<Interval>& parts) const {
  // wrap every piece into [0, period)
  std::vector<Interval> folded;
  for (const auto& iv : parts) {
    Rational lo = iv.lo, hi = iv.hi;
    Rational shift = -(lo / period_).floor() * period_;
    lo += shift;
    hi += shift;
    while (!(hi < period_) && !(hi == period_)) {
      folded.push_back({lo, period_});
      hi -= period_;
      lo = Rational(0);
    }
    if (lo < hi) folded.push_back({lo, hi});
  }
  return normalize(std::move(folded));
}

IntervalSet IntervalSet::periodic(const Rational& period, std::vector<Interval> tmpl) {
  if (!(Rational(0) < period))
    throw std::invalid_argument("IntervalSet: period must be positive");
  IntervalSet s;
  s.periodic_ = true;
  s.period_ = period;
  s.parts_ = s.fold_into_period(normalize(std::move(tmpl)));
  return s;
}

IntervalSet IntervalSet::materialize(const Rational& lo, const Rational& hi) const {
  std::vector<Interval> out;
  if (!periodic_) {
    for (const auto& iv : parts_) {
      Rational a = std::max(iv.lo, lo), b = std::min(iv.hi, hi);
      if (a < b) out.push_back({a, b});
    }
    return IntervalSet::of(std::move(out));
  }
  long first = ((lo / period_).floor() - Rational(1)).floor_long();
  long last = ((hi / period_).floor() + Rational(1)).floor_long();
  for (long n = first; n <= last; ++n) {
    Rational shift = Rational(n) * period_;
    for (const auto& iv : parts_) {
      Rational a = std::max(iv.lo + shift, lo), b = std::min(iv.hi + shift, hi);
      if (a < b) out.push_back({a, b});
    }
  }
  return IntervalSet::of(std::move(out));
}

IntervalSet IntervalSet::translate(const Rational& v) const {
  std::vector<Interval> moved;
  moved.reserve(parts_.size());
  for (const auto& iv : parts_) moved.push_back({iv.lo + v, iv.hi + v});
  if (!periodic_) return IntervalSet::of(std::move(moved));
  return IntervalSet::periodic(period_, std::move(moved));
}

IntervalSet IntervalSet::thicken(const Rational& delta) const {
  if (!(Rational(0) < delta))
    throw std::invalid_argument("thicken: delta must be positive");
  std::vector<Interval> fat;
  fat.reserve(parts_.size());
  for (const auto& iv : parts_) fat.push_back({iv.lo - delta, iv.hi + delta});
  if (!periodic_) return IntervalSet::of(std::move(fat));
  return IntervalSet::periodic(period_, std::move(fat));
}

Rational IntervalSet::measure() const {
  if (periodic_ && !parts_.empty())
    throw std::domain_error("measure: periodic set has infinite measure");
  Rational m(0);
  for (const auto& iv : parts_) m += iv.hi - iv.lo;
  return m;
}

Rational IntervalSet::measure_in(const Rational& lo, const Rational& hi) const {
  return materialize(lo, hi).measure();
}

IntervalSet IntervalSet::union_(const IntervalSet& a, const IntervalSet& b) {
  if (a.periodic_ || b.periodic_) {
    if (a.periodic_ && b.periodic_ && a.period_ == b.period_) {
      std::vector<Interval> parts = a.parts_;
      parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
      return IntervalSet::periodic(a.period_, std::move(parts));
    }
    throw std::domain_error("union: mixed periodicity needs materialize()");
  }
  std::vector<Interval> parts = a.parts_;
  parts.insert(parts.end(), b.parts_.begin(), b.parts_.end());
  return IntervalSet::of(std::move(parts));
}

IntervalSet IntervalSet::intersect(const IntervalSet& a, const IntervalSet& b) {
  if (a.periodic_ || b.periodic_) {
    if (a.periodic_ && b.periodic_ && a.period_ == b.period_) {
      // intersect templates with wraparound on one period
      IntervalSet am = a.materialize(Rational(0), a.period_);
      IntervalSet bm = b.materialize(Rational(0), a.period_);
      return IntervalSet::periodic(a.period_, intersect(am, bm).parts_);
    }
    throw std::domain_error("intersect: mixed periodicity needs materialize()");
  }
  std::vector<Interval> out;
  size_t i = 0, j = 0;
  while (i < a.parts_.size() && j < b.parts_.size()) {
    const Interval& x = a.parts_[i];
    const Interval& y = b.parts_[j];
    Rational lo = std::max(x.lo, y.lo), hi = std::min(x.hi, y.hi);
    if (lo < hi) out.push_back({lo, hi});
    if (x.hi < y.hi) ++i; else ++j;
  }
  return IntervalSet::of(std::move(out));
}

IntervalSet IntervalSet::intersect_periodic(const std::vector<IntervalSet>& sets) {
  if (sets.empty()) throw std::invalid_argument("intersect_periodic: empty list");
  IntervalSet acc = sets[0];
  for (size_t i = 1; i < sets.size(); ++i) acc = intersect(acc, sets[i]);
  return acc;
}

bool IntervalSet::contains_set(const IntervalSet& other) const {
  return intersect(*this, other).parts_ == other.parts_;
}

IntervalSet IntervalSet::parse(std::istream& in) {
  std::string line;
  std::vector<Interval> parts;
  Rational period(0);
  bool periodic = false;
  while (std::getline(in, line)) {
    // strip whitespace and comments
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::string clean;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
    if (clean.empty()) continue;
    if (clean.rfind("period=", 0) == 0) {
      period = Rational::from_string(clean.substr(7));
      periodic = true;
      continue;
    }
    auto comma = clean.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("IntervalSet: expected 'a,b' line, got '" + line + "'");
    parts.push_back({Rational::from_string(clean.substr(0, comma)),
                     Rational::from_string(clean.substr(comma + 1))});
  }
  return periodic ? IntervalSet::periodic(period, std::move(parts))
                  : IntervalSet::of(std::move(parts));
}

IntervalSet IntervalSet::parse_text(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string IntervalSet::str() const {
  std::string s;
  if (periodic_) s += "period=" + period_.str() + "\n";
  for (const auto& iv : parts_) s += iv.lo.str() + "," + iv.hi.str() + "\n";
  return s;
}

}  // namespace polyflow
