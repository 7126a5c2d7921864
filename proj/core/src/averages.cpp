#include "polyflow/averages.hpp"

#include <cmath>
#include <stdexcept>

namespace polyflow {

AverageEstimate multi_average(const Flow& flow, const std::vector<RealPoly>& family,
                              const std::vector<Observable>& fs, const Point& x,
                              const SamplingPlan& plan) {
  if (family.size() != fs.size())
    throw std::invalid_argument("multi_average: |family| != |observables|");
  for (const auto& p : family)
    if (p.d != plan.d)
      throw std::invalid_argument("multi_average: family arity != plan arity");

  AverageEstimate est;
  est.scheme = plan.scheme;
  est.seed = plan.seed;
  est.R = plan.R;

  bool all_const = true;
  for (const auto& f : fs) all_const = all_const && observable_is_constant(f);
  if (all_const) {
    est.value = product_of_integrals(fs);
    est.samples = 0;
    return est;
  }

  const long n = plan.total_samples();
  Complex sum(0.0, 0.0);
  double sumsq = 0.0;
  for (long i = 0; i < n; ++i) {
    std::vector<double> s = plan.point(i);
    Complex prod(1.0, 0.0);
    for (size_t j = 0; j < family.size(); ++j) {
      Point y = flow_apply(flow, family[j].eval(s), x);
      prod *= observable_eval(fs[j], y);
    }
    sum += prod;
    sumsq += std::norm(prod);
  }
  est.value = sum / static_cast<double>(n);
  est.samples = n;
  if (plan.scheme == Scheme::monte_carlo && n > 1) {
    double var = (sumsq - static_cast<double>(n) * std::norm(est.value)) /
                 static_cast<double>(n - 1);
    est.stderr_est = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
  return est;
}

double multi_average_l2(const Flow& flow, const std::vector<RealPoly>& family,
                        const std::vector<Observable>& fs,
                        const std::function<Complex(const Point&)>& reference,
                        const SamplingPlan& plan, int grid_per_axis) {
  const int m = flow_dim(flow);
  long cells = 1;
  for (int i = 0; i < m; ++i) cells *= grid_per_axis;
  double acc = 0.0;
  for (long c = 0; c < cells; ++c) {
    Point x(m);
    long rem = c;
    for (int i = 0; i < m; ++i) {
      x[i] = (static_cast<double>(rem % grid_per_axis) + 0.5) / grid_per_axis;
      rem /= grid_per_axis;
    }
    AverageEstimate e = multi_average(flow, family, fs, x, plan);
    acc += std::norm(e.value - reference(x));
  }
  return std::sqrt(acc / static_cast<double>(cells));
}

}  // namespace polyflow
