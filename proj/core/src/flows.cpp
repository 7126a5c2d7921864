#include "polyflow/flows.hpp"

#include <cmath>
#include <stdexcept>

namespace polyflow {

double mod1(double x) {
  double f = x - std::floor(x);
  return f >= 1.0 ? 0.0 : f;  // guard against rounding to exactly 1
}

std::optional<std::pair<long, long>> rational_approx(double x, long max_den) {
  // continued fraction convergents
  double a = x;
  long p0 = 1, q0 = 0, p1 = static_cast<long>(std::floor(a)), q1 = 1;
  a -= std::floor(a);
  for (int iter = 0; iter < 64; ++iter) {
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-12)
      return std::make_pair(p1, q1);
    if (a < 1e-15) break;
    a = 1.0 / a;
    long ai = static_cast<long>(std::floor(a));
    a -= std::floor(a);
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
  }
  if (q1 <= max_den &&
      std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) < 1e-12)
    return std::make_pair(p1, q1);
  return std::nullopt;
}

Point TorusFlow::apply(double t, const Point& x) const {
  if (static_cast<int>(x.size()) != m)
    throw std::invalid_argument("TorusFlow: point dimension mismatch");
  Point out(m);
  for (int i = 0; i < m; ++i) out[i] = mod1(x[i] + t * gamma[i]);
  return out;
}

bool TorusFlow::ergodic_hint() const {
  for (double g : gamma)
    if (rational_approx(g)) return false;
  return true;
}

HeisPoint HeisenbergFlow::mul(const HeisPoint& a, const HeisPoint& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y};
}

HeisPoint HeisenbergFlow::reduce(HeisPoint g) {
  g = mul(g, {-std::floor(g.x), 0, 0});
  g = mul(g, {0, -std::floor(g.y), 0});
  g = mul(g, {0, 0, -std::floor(g.z)});
  if (g.x >= 1.0) g.x = 0.0;  // rounding guards
  if (g.y >= 1.0) g.y = 0.0;
  if (g.z >= 1.0) g.z = 0.0;
  return g;
}

HeisPoint HeisenbergFlow::one_param(double t) const {
  return {alpha * t, beta * t, zeta * t + alpha * beta * t * t / 2.0};
}

HeisPoint HeisenbergFlow::apply(double t, const HeisPoint& g) const {
  return reduce(mul(one_param(t), g));
}

bool HeisenbergFlow::ergodic_base_hint() const {
  if (alpha == 0.0 || beta == 0.0) return false;
  return !rational_approx(alpha / beta);
}

Point flow_apply(const Flow& flow, double t, const Point& x) {
  if (std::holds_alternative<TorusFlow>(flow))
    return std::get<TorusFlow>(flow).apply(t, x);
  const auto& h = std::get<HeisenbergFlow>(flow);
  if (x.size() != 3) throw std::invalid_argument("Heisenberg point must be length 3");
  HeisPoint g = h.apply(t, {x[0], x[1], x[2]});
  return {g.x, g.y, g.z};
}

int flow_dim(const Flow& flow) {
  if (std::holds_alternative<TorusFlow>(flow)) return std::get<TorusFlow>(flow).m;
  return 3;
}

}  // namespace polyflow
