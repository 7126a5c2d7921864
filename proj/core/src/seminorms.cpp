#include "polyflow/seminorms.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace polyflow {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using FreqMap = std::map<std::vector<int>, Complex>;

std::vector<int> vsub(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

std::vector<int> vadd(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

int max_abs_freq(const FreqMap& f) {
  int A = 0;
  for (const auto& [n, c] : f)
    for (int v : n) A = std::max(A, std::abs(v));
  return A;
}

// G_k(g) = ||g||_k^{2^k}. Limits are resolved exactly: phases n.gamma with
// rationally independent gamma resonate only on integer-vector relations,
// which reduces every averaging level to Fourier bookkeeping.
double Gk(const FreqMap& g, int k, int m);

// G_2 = sum_nu |c(nu)|^4.
double G2(const FreqMap& g) {
  double acc = 0.0;
  for (const auto& [n, c] : g) acc += std::norm(c) * std::norm(c);
  return acc;
}

// G_3 = sum_nu sum_sigma |(rho_nu * rho_nu)(sigma)|^2 with
// rho_{nu,a} = conj(c_a) c_{a+nu}.
double G3(const FreqMap& g, int m) {
  std::map<std::vector<int>, FreqMap> rho;  // nu -> (a -> value)
  for (const auto& [a, ca] : g)
    for (const auto& [b, cb] : g) rho[vsub(b, a)][a] = std::conj(ca) * cb;
  double acc = 0.0;
  for (const auto& [nu, r] : rho) {
    FreqMap conv;
    for (const auto& [a, va] : r)
      for (const auto& [b, vb] : r) conv[vadd(a, b)] += va * vb;
    for (const auto& [s, v] : conv) acc += std::norm(v);
  }
  return acc;
}

FreqMap correlation_shifted(const FreqMap& g, const std::vector<double>& theta) {
  // conj(g) * shift_theta(g); coefficient at nu carries e((a+nu).theta) factors.
  FreqMap out;
  for (const auto& [a, ca] : g)
    for (const auto& [b, cb] : g) {
      double phase = 0.0;
      for (size_t v = 0; v < theta.size(); ++v) phase += b[v] * theta[v];
      out[vsub(b, a)] += std::conj(ca) * cb * std::polar(1.0, kTwoPi * phase);
    }
  return out;
}

double Gk(const FreqMap& g, int k, int m) {
  if (g.empty()) return 0.0;
  if (k == 1) {
    auto it = g.find(std::vector<int>(m, 0));
    return it == g.end() ? 0.0 : std::norm(it->second);
  }
  if (k == 2) return G2(g);
  if (k == 3) return G3(g, m);
  // One averaging level by rectangle quadrature, exact for trig polynomials:
  // the integrand is a trig polynomial in theta of per-axis degree
  // < 2^k * max|freq|.
  int A = max_abs_freq(g);
  long M = (1L << k) * std::max(A, 1) + 3;
  long cells = 1;
  for (int v = 0; v < m; ++v) cells *= M;
  double acc = 0.0;
  std::vector<double> theta(m);
  for (long c = 0; c < cells; ++c) {
    long rem = c;
    for (int v = 0; v < m; ++v) {
      theta[v] = static_cast<double>(rem % M) / static_cast<double>(M);
      rem /= M;
    }
    acc += Gk(correlation_shifted(g, theta), k - 1, m);
  }
  return acc / static_cast<double>(cells);
}

}  // namespace

double hk_seminorm_closed(const TrigPoly& f, int k) {
  if (k < 1) throw std::invalid_argument("hk_seminorm: order must be >= 1");
  if (k == 1) return std::abs(f.integral());
  double g = Gk(f.coeffs, k, f.m);
  return std::pow(g, 1.0 / static_cast<double>(1L << k));
}

double hk_seminorm_recursion(const TrigPoly& f, int k, const std::vector<double>& gamma,
                             long N) {
  if (k < 1) throw std::invalid_argument("hk_seminorm: order must be >= 1");
  if (static_cast<int>(gamma.size()) != f.m)
    throw std::invalid_argument("hk_seminorm: direction dimension mismatch");
  for (double g : gamma)
    if (rational_approx(g))
      throw std::invalid_argument("hk_seminorm: rational rotation is not ergodic");
  if (k == 1) return std::abs(f.integral());

  // (1/N) sum_{n=1}^{N} G_{k-1}(conj(f) . T^n f), inner values exact.
  double acc = 0.0;
  for (long n = 1; n <= N; ++n) {
    std::vector<double> theta(f.m);
    for (int v = 0; v < f.m; ++v) theta[v] = std::fmod(gamma[v] * n, 1.0);
    acc += Gk(correlation_shifted(f.coeffs, theta), k - 1, f.m);
  }
  acc /= static_cast<double>(N);
  return std::pow(acc, 1.0 / static_cast<double>(1L << k));
}

SeminormValue hk_seminorm(const TrigPoly& f, int k, SeminormValue::Method method,
                          const std::vector<double>& gamma, long N) {
  SeminormValue out;
  out.k = k;
  out.method = method;
  if (method == SeminormValue::Method::closed_form) {
    out.value = hk_seminorm_closed(f, k);
  } else {
    out.value = hk_seminorm_recursion(f, k, gamma, N);
    out.N = N;
  }
  return out;
}

SeminormBoundReport seminorm_bound_check(const TorusFlow& flow,
                                         const std::vector<RealPoly>& linear_family,
                                         const std::vector<TrigPoly>& fs,
                                         const SamplingPlan& plan, int k,
                                         double slack) {
  const int kk = static_cast<int>(linear_family.size());
  if (fs.size() != linear_family.size())
    throw std::invalid_argument("seminorm_bound_check: |family| != |observables|");

  // Average in x resolved exactly through Fourier coefficients: the L2 norm
  // of avg_s prod_j f_j(x + p_j(s) gamma) is
  //   sqrt( sum_nu | sum_{combo -> nu} prod c_j . avg_s e(2pi i w(s)) |^2 )
  // with w(s) = sum_j (n_j . gamma) p_j(s).
  const long n_samples = plan.total_samples();
  std::vector<std::vector<double>> pvals(kk, std::vector<double>(n_samples));
  for (long i = 0; i < n_samples; ++i) {
    auto s = plan.point(i);
    for (int j = 0; j < kk; ++j) pvals[j][i] = linear_family[j].eval(s);
  }

  std::map<std::vector<int>, Complex> bucket;
  std::vector<std::map<std::vector<int>, Complex>::const_iterator> its(kk);
  std::function<void(int, Complex, std::vector<int>&, std::vector<double>&)> rec =
      [&](int j, Complex amp, std::vector<int>& freq_sum, std::vector<double>& omega) {
        if (j == kk) {
          Complex avg(0.0, 0.0);
          for (long i = 0; i < n_samples; ++i) {
            double phase = 0.0;
            for (int jj = 0; jj < kk; ++jj) phase += omega[jj] * pvals[jj][i];
            avg += std::polar(1.0, kTwoPi * phase);
          }
          avg /= static_cast<double>(n_samples);
          bucket[freq_sum] += amp * avg;
          return;
        }
        for (auto it = fs[j].coeffs.begin(); it != fs[j].coeffs.end(); ++it) {
          its[j] = it;
          double ng = 0.0;
          for (int v = 0; v < flow.m; ++v) ng += it->first[v] * flow.gamma[v];
          omega[j] = ng;
          for (int v = 0; v < flow.m; ++v) freq_sum[v] += it->first[v];
          rec(j + 1, amp * it->second, freq_sum, omega);
          for (int v = 0; v < flow.m; ++v) freq_sum[v] -= it->first[v];
        }
      };
  std::vector<int> freq_sum(flow.m, 0);
  std::vector<double> omega(kk, 0.0);
  rec(0, Complex(1.0, 0.0), freq_sum, omega);

  double norm_sq = 0.0;
  for (const auto& [nu, c] : bucket) norm_sq += std::norm(c);

  SeminormBoundReport rep;
  rep.k = k;
  rep.slack = slack;
  rep.average_norm = std::sqrt(norm_sq);
  rep.min_seminorm = std::numeric_limits<double>::infinity();
  for (const auto& f : fs)
    rep.min_seminorm = std::min(rep.min_seminorm, hk_seminorm_closed(f, k));
  rep.pass = rep.average_norm <= rep.min_seminorm + slack;
  return rep;
}

}  // namespace polyflow
