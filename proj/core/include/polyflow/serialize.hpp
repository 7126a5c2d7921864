#pragma once

#include <json.hpp>

#include "polyflow/averages.hpp"
#include "polyflow/complexity.hpp"
#include "polyflow/density.hpp"
#include "polyflow/equidist.hpp"
#include "polyflow/kronecker.hpp"
#include "polyflow/seminorms.hpp"
#include "polyflow/vdc.hpp"

namespace polyflow {

using Json = nlohmann::ordered_json;

inline Json to_json(const CoeffMatrix& m) {
  Json rows = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(c.str());
    rows.push_back(r);
  }
  return rows;
}

inline Json to_json(const CoefficientMatrix& a) {
  Json j;
  j["k"] = a.k;
  j["l"] = a.l;
  j["basis"] = a.basis.str();
  j["alpha"] = to_json(a.alpha);
  Json idx = Json::array();
  for (int i : a.basis_indices) idx.push_back(i + 1);
  j["basis_members"] = idx;
  j["stripped_nonzero_constants"] = a.had_nonzero_constants;
  return j;
}

inline Json to_json(const ComplexityCertificate& c) {
  Json j;
  j["j"] = c.j;
  j["bound"] = c.bound;
  j["rule"] = bound_rule_name(c.rule);
  Json subs = Json::array();
  for (const auto& s : c.substitutions) {
    Json sj;
    Json g = Json::array();
    for (const auto& v : s.gamma) g.push_back(v.str());
    sj["gamma"] = g;
    sj["B"] = to_json(s.b);
    sj["det"] = s.det.str();
    subs.push_back(sj);
  }
  j["substitutions"] = subs;
  j["linearized"] = c.linearized;
  j["resulting"] = c.resulting;
  j["lambda1_before"] = c.lambda1_before;
  j["lambda1_after"] = c.lambda1_after;
  if (c.fallback) j["fallback"] = true;
  return j;
}

inline Json to_json(const FamilyComplexityReport& r) {
  Json j;
  j["family"] = r.family;
  j["linearization"] = to_json(r.linearization);
  Json per = Json::array();
  for (const auto& c : r.per_j) per.push_back(to_json(c));
  j["per_j"] = per;
  j["family_bound"] = r.family_bound;
  j["exact"] = r.exact;
  j["independent"] = r.independent;
  if (!r.exact)
    j["bound_kind"] = "upper";  // attainment above 0 is open
  return j;
}

inline Json to_json(const AverageEstimate& e) {
  Json j;
  j["value"] = {{"re", e.value.real()}, {"im", e.value.imag()}};
  j["stderr"] = e.stderr_est;
  j["samples"] = e.samples;
  j["scheme"] = scheme_name(e.scheme);
  j["seed"] = e.seed;
  j["R"] = e.R;
  return j;
}

inline Json to_json(const KroneckerResult& r) {
  Json j;
  j["quadrature"] = {{"re", r.quadrature.real()}, {"im", r.quadrature.imag()}};
  if (r.closed_form)
    j["closed_form"] = {{"re", r.closed_form->real()}, {"im", r.closed_form->imag()}};
  j["quadrature_points"] = r.quadrature_points;
  return j;
}

inline Json to_json(const SeminormValue& v) {
  Json j;
  j["k"] = v.k;
  j["value"] = v.value;
  j["method"] =
      v.method == SeminormValue::Method::closed_form ? "fourier-closed-form"
                                                     : "recursion-estimate";
  if (v.N > 0) j["N"] = v.N;
  return j;
}

inline Json to_json(const SeminormBoundReport& r) {
  Json j;
  j["average_norm"] = r.average_norm;
  j["min_seminorm"] = r.min_seminorm;
  j["k"] = r.k;
  j["slack"] = r.slack;
  j["pass"] = r.pass;
  return j;
}

inline Json to_json(const VdcReport& r) {
  Json j;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["margin"] = r.margin;
  j["slack"] = r.slack;
  j["pass"] = r.pass;
  return j;
}

inline Json to_json(const DiscrepancyReport& r) {
  Json j;
  j["discrepancy"] = r.discrepancy;
  j["samples"] = r.samples;
  j["depth"] = r.depth;
  j["degenerate"] = r.degenerate;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const HeisenbergReport& r) {
  Json j;
  j["base_discrepancy"] = r.base_discrepancy;
  j["z_tv"] = r.z_tv;
  j["ergodic_base"] = r.ergodic_base;
  j["degenerate"] = r.degenerate;
  j["samples"] = r.samples;
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

inline Json to_json(const DensityEstimate& d) {
  Json j;
  j["L"] = d.window_length.str();
  j["best_start"] = d.best_start.str();
  j["value"] = d.value.str();
  j["value_double"] = d.value.to_double();
  j["exact"] = d.exact;
  if (!d.trend.empty()) {
    Json t = Json::array();
    for (const auto& [len, v] : d.trend)
      t.push_back({{"L", len.str()}, {"value", v.str()}});
    j["trend"] = t;
  }
  return j;
}

inline Json to_json(const GapReport& g) {
  Json j;
  j["s_max"] = g.s_max.str();
  j["step"] = g.step.str();
  j["threshold"] = g.threshold.str();
  j["dstar"] = g.dstar.str();
  j["dstar_exact"] = g.dstar_exact;
  j["grid_count"] = g.grid_count;
  j["good_count"] = g.good_count;
  Json sample = Json::array();
  for (const auto& s : g.good_sample) sample.push_back(s.str());
  j["good_sample"] = sample;
  if (g.max_gap)
    j["max_gap"] = g.max_gap->str();
  else
    j["max_gap"] = nullptr;
  j["complexity_bound"] = g.complexity_bound;
  j["certified_low_complexity"] = g.certified_low_complexity;
  j["progression_shape"] = g.progression_shape;
  j["hypothesis_certified"] = g.hypothesis_certified;
  j["delta_zero_mode"] = g.delta_zero_mode;
  if (!g.note.empty()) j["note"] = g.note;
  return j;
}

}  // namespace polyflow
