#include "polyflow/kronecker.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

namespace polyflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

KroneckerResult kronecker_limit(const CoefficientMatrix& a,
                                const std::vector<Observable>& fs, const Point& x,
                                int resolution,
                                const std::optional<std::vector<double>>& gamma,
                                double tau_value) {
  const int k = a.k, l = a.l;
  if (static_cast<int>(fs.size()) != k)
    throw std::invalid_argument("kronecker_limit: |observables| != k");
  const int m = observable_dim(fs[0]);
  for (const auto& f : fs)
    if (observable_dim(f) != m)
      throw std::invalid_argument("kronecker_limit: mixed observable dimensions");
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("kronecker_limit: base point dimension");

  KroneckerResult out;

  // Numeric coefficient matrix with tau bound to its numeric value.
  std::vector<std::vector<double>> an(k, std::vector<double>(l));
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < l; ++i) an[j][i] = a.alpha[j][i].to_double(tau_value);

  // Quadrature over (T^m)^l on a rectangle-rule lattice.
  {
    const int dims = m * l;
    long npts = 1;
    for (int i = 0; i < dims; ++i) npts *= resolution;
    Complex sum(0.0, 0.0);
    std::vector<double> u(dims);
    for (long c = 0; c < npts; ++c) {
      long rem = c;
      for (int i = 0; i < dims; ++i) {
        u[i] = static_cast<double>(rem % resolution) / resolution;
        rem /= resolution;
      }
      Complex prod(1.0, 0.0);
      Point y(m);
      for (int j = 0; j < k; ++j) {
        for (int v = 0; v < m; ++v) {
          double acc = x[v];
          for (int i = 0; i < l; ++i) acc += an[j][i] * u[i * m + v];
          y[v] = mod1(acc);
        }
        prod *= observable_eval(fs[j], y);
      }
      sum += prod;
    }
    out.quadrature = sum / static_cast<double>(npts);
    out.quadrature_points = npts;
  }

  // Closed form by frequency matching, for trig-poly observables only.
  bool all_trig = true;
  for (const auto& f : fs) all_trig = all_trig && std::holds_alternative<TrigPoly>(f);
  if (all_trig) {
    std::vector<const TrigPoly*> tp;
    for (const auto& f : fs) tp.push_back(&std::get<TrigPoly>(f));

    Complex total(0.0, 0.0);
    std::vector<std::map<std::vector<int>, Complex>::const_iterator> its(k);
    // iterate the product of supports
    std::function<void(int, Complex, std::vector<int>&)> rec =
        [&](int j, Complex amp, std::vector<int>& freq_sum) {
          if (j == k) {
            bool match = true;
            if (gamma) {
              // scalar condition per basis variable, concrete direction
              for (int i = 0; i < l && match; ++i) {
                double acc = 0.0;
                for (int jj = 0; jj < k; ++jj) {
                  double ng = 0.0;
                  for (int v = 0; v < m; ++v) ng += its[jj]->first[v] * (*gamma)[v];
                  acc += an[jj][i] * ng;
                }
                match = std::abs(acc) < 1e-9;
              }
            } else {
              // exact componentwise condition in the coefficient ring
              for (int i = 0; i < l && match; ++i)
                for (int v = 0; v < m && match; ++v) {
                  Coeff acc;
                  for (int jj = 0; jj < k; ++jj)
                    acc += a.alpha[jj][i] * Coeff(its[jj]->first[v]);
                  match = acc.is_zero();
                }
            }
            if (match) {
              double phase = 0.0;
              for (int v = 0; v < m; ++v) phase += freq_sum[v] * x[v];
              total += amp * std::polar(1.0, kTwoPi * phase);
            }
            return;
          }
          for (auto it = tp[j]->coeffs.begin(); it != tp[j]->coeffs.end(); ++it) {
            its[j] = it;
            for (int v = 0; v < m; ++v) freq_sum[v] += it->first[v];
            rec(j + 1, amp * it->second, freq_sum);
            for (int v = 0; v < m; ++v) freq_sum[v] -= it->first[v];
          }
        };
    std::vector<int> freq_sum(m, 0);
    rec(0, Complex(1.0, 0.0), freq_sum);
    out.closed_form = total;
  }

  return out;
}

}  // namespace polyflow
