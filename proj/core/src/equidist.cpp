#include "polyflow/equidist.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyflow {

namespace {

// Max over dyadic cells (depths 1..depth) of |empirical - volume| for points
// in [0,1)^w.
double dyadic_discrepancy(const std::vector<std::vector<double>>& pts, int w, int depth) {
  double worst = 0.0;
  for (int t = 1; t <= depth; ++t) {
    const long side = 1L << t;
    long cells = 1;
    for (int i = 0; i < w; ++i) cells *= side;
    std::vector<long> counts(cells, 0);
    for (const auto& p : pts) {
      long idx = 0;
      for (int i = 0; i < w; ++i) {
        long c = static_cast<long>(p[i] * side);
        if (c >= side) c = side - 1;
        idx = idx * side + c;
      }
      counts[idx]++;
    }
    const double vol = 1.0 / static_cast<double>(cells);
    for (long c = 0; c < cells; ++c) {
      double emp = static_cast<double>(counts[c]) / static_cast<double>(pts.size());
      worst = std::max(worst, std::abs(emp - vol));
    }
  }
  return worst;
}

bool all_coeffs_rational(const RealPoly& p) {
  bool any = false;
  for (const auto& [e, c] : p.terms) {
    bool constant = true;
    for (int v : e) constant = constant && v == 0;
    if (constant) continue;
    any = true;
    if (!rational_approx(c)) return false;
  }
  return any;
}

}  // namespace

DiscrepancyReport path_discrepancy(const std::vector<RealPoly>& path,
                                   const SamplingPlan& plan, int depth) {
  const int w = static_cast<int>(path.size());
  if (w == 0) throw std::invalid_argument("path_discrepancy: empty path");

  DiscrepancyReport rep;
  rep.depth = depth;
  const long n = plan.total_samples();
  rep.samples = n;

  std::vector<std::vector<double>> pts;
  pts.reserve(n);
  for (long i = 0; i < n; ++i) {
    auto s = plan.point(i);
    std::vector<double> q(w);
    for (int j = 0; j < w; ++j) q[j] = mod1(path[j].eval(s));
    pts.push_back(std::move(q));
  }
  rep.discrepancy = dyadic_discrepancy(pts, w, depth);

  for (int j = 0; j < w; ++j)
    if (path[j].is_constant() || all_coeffs_rational(path[j])) {
      rep.degenerate = true;
      rep.note = "component " + std::to_string(j + 1) +
                 " has rational coefficients; equidistribution hypothesis not certified";
      break;
    }
  if (rep.discrepancy > 0.5) {
    rep.degenerate = true;
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += "sampling collapsed (grid aliasing or constant path)";
  }
  return rep;
}

HeisenbergReport heisenberg_factor_check(const HeisenbergFlow& flow, const RealPoly& p,
                                         const SamplingPlan& plan, int depth,
                                         int z_bins) {
  HeisenbergReport rep;
  rep.ergodic_base = flow.ergodic_base_hint();
  if (!rep.ergodic_base)
    rep.note = "base torus flow is not ergodic (rational alpha/beta)";
  if (p.is_constant()) {
    rep.degenerate = true;
    if (!rep.note.empty()) rep.note += "; ";
    rep.note += "constant path";
  }

  const long n = plan.total_samples();
  rep.samples = n;
  std::vector<std::vector<double>> base;
  base.reserve(n);
  std::vector<long> zcounts(z_bins, 0);
  for (long i = 0; i < n; ++i) {
    auto s = plan.point(i);
    HeisPoint g = flow.apply(p.eval(s), HeisPoint{});
    base.push_back({g.x, g.y});
    long zb = static_cast<long>(g.z * z_bins);
    if (zb >= z_bins) zb = z_bins - 1;
    zcounts[zb]++;
  }
  rep.base_discrepancy = dyadic_discrepancy(base, 2, depth);
  double tv = 0.0;
  for (int b = 0; b < z_bins; ++b) {
    double emp = static_cast<double>(zcounts[b]) / static_cast<double>(n);
    tv += std::abs(emp - 1.0 / z_bins);
  }
  rep.z_tv = 0.5 * tv;
  if (rep.base_discrepancy > 0.5) rep.degenerate = true;
  return rep;
}

}  // namespace polyflow
