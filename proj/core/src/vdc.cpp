#include "polyflow/vdc.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace polyflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

VdcReport vdc_check(const TorusFlow& flow, const std::vector<RealPoly>& family,
                    const std::vector<TrigPoly>& fs, double psi_extent, int psi_grid,
                    const SamplingPlan& plan, double slack) {
  const int k = static_cast<int>(family.size());
  if (fs.size() != family.size())
    throw std::invalid_argument("vdc_check: |family| != |observables|");
  const int d = plan.d;

  // Flatten the product of supports into combos: x-frequency bucket, joint
  // amplitude, and the gamma-paired frequency weight per member.
  struct Combo {
    std::vector<int> nu;
    Complex amp;
    std::vector<double> omega;  // (n_j . gamma) per member
  };
  std::vector<Combo> combos;
  {
    std::vector<std::map<std::vector<int>, Complex>::const_iterator> its(k);
    std::function<void(int, Complex)> rec = [&](int j, Complex amp) {
      if (j == k) {
        Combo c;
        c.nu.assign(flow.m, 0);
        c.omega.resize(k);
        c.amp = amp;
        for (int jj = 0; jj < k; ++jj) {
          double ng = 0.0;
          for (int v = 0; v < flow.m; ++v) {
            c.nu[v] += its[jj]->first[v];
            ng += its[jj]->first[v] * flow.gamma[v];
          }
          c.omega[jj] = ng;
        }
        combos.push_back(std::move(c));
        return;
      }
      for (auto it = fs[j].coeffs.begin(); it != fs[j].coeffs.end(); ++it) {
        its[j] = it;
        rec(j + 1, amp * it->second);
      }
    };
    rec(0, Complex(1.0, 0.0));
  }

  const long n_samples = plan.total_samples();
  std::vector<std::vector<double>> samples(n_samples);
  for (long i = 0; i < n_samples; ++i) samples[i] = plan.point(i);

  auto coef_at = [&](const std::vector<double>& s,
                     std::map<std::vector<int>, Complex>& out) {
    out.clear();
    std::vector<double> pv(k);
    for (int j = 0; j < k; ++j) pv[j] = family[j].eval(s);
    for (const auto& c : combos) {
      double phase = 0.0;
      for (int j = 0; j < k; ++j) phase += c.omega[j] * pv[j];
      out[c.nu] += c.amp * std::polar(1.0, kTwoPi * phase);
    }
  };

  VdcReport rep;
  rep.slack = slack;

  // LHS: squared L2 norm of the s-average of g_s.
  {
    std::map<std::vector<int>, Complex> acc, tmp;
    for (long i = 0; i < n_samples; ++i) {
      coef_at(samples[i], tmp);
      for (const auto& [nu, c] : tmp) acc[nu] += c;
    }
    double norm_sq = 0.0;
    for (const auto& [nu, c] : acc) norm_sq += std::norm(c / static_cast<double>(n_samples));
    rep.lhs = norm_sq;
  }

  // RHS: average over the Psi x Psi grid of |avg_s <g_{s+u}, g_{s+v}>|.
  {
    long cells = 1;
    for (int i = 0; i < d; ++i) cells *= psi_grid;
    double total = 0.0;
    std::map<std::vector<int>, Complex> cu, cv;
    std::vector<double> su(d), sv(d), shifted(d);
    for (long a = 0; a < cells; ++a) {
      long rem = a;
      for (int i = 0; i < d; ++i) {
        su[i] = (static_cast<double>(rem % psi_grid) + 0.5) / psi_grid * psi_extent;
        rem /= psi_grid;
      }
      for (long b = 0; b < cells; ++b) {
        rem = b;
        for (int i = 0; i < d; ++i) {
          sv[i] = (static_cast<double>(rem % psi_grid) + 0.5) / psi_grid * psi_extent;
          rem /= psi_grid;
        }
        Complex inner_avg(0.0, 0.0);
        for (long i = 0; i < n_samples; ++i) {
          for (int t = 0; t < d; ++t) shifted[t] = samples[i][t] + su[t];
          coef_at(shifted, cu);
          for (int t = 0; t < d; ++t) shifted[t] = samples[i][t] + sv[t];
          coef_at(shifted, cv);
          Complex ip(0.0, 0.0);
          for (const auto& [nu, c] : cu) {
            auto it = cv.find(nu);
            if (it != cv.end()) ip += c * std::conj(it->second);
          }
          inner_avg += ip;
        }
        total += std::abs(inner_avg / static_cast<double>(n_samples));
      }
    }
    rep.rhs = total / static_cast<double>(cells * cells);
  }

  rep.margin = rep.rhs - rep.lhs;
  rep.pass = rep.lhs <= rep.rhs + slack;
  return rep;
}

}  // namespace polyflow
