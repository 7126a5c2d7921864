#include "polyflow/observables.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace polyflow {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}

TrigPoly TrigPoly::character(const std::vector<int>& freq) {
  TrigPoly f;
  f.m = static_cast<int>(freq.size());
  f.coeffs[freq] = Complex(1.0, 0.0);
  return f;
}

TrigPoly TrigPoly::constant(int m, Complex c) {
  TrigPoly f;
  f.m = m;
  if (c != Complex(0.0, 0.0)) f.coeffs[std::vector<int>(m, 0)] = c;
  return f;
}

Complex TrigPoly::eval(const Point& x) const {
  Complex acc(0.0, 0.0);
  for (const auto& [n, c] : coeffs) {
    double phase = 0.0;
    for (int i = 0; i < m; ++i) phase += n[i] * x[i];
    acc += c * std::polar(1.0, kTwoPi * phase);
  }
  return acc;
}

Complex TrigPoly::integral() const {
  auto it = coeffs.find(std::vector<int>(m, 0));
  return it == coeffs.end() ? Complex(0.0, 0.0) : it->second;
}

double TrigPoly::sup_bound() const {
  double s = 0.0;
  for (const auto& [n, c] : coeffs) s += std::abs(c);
  return s;
}

TrigPoly TrigPoly::conjugate() const {
  TrigPoly out;
  out.m = m;
  for (const auto& [n, c] : coeffs) {
    std::vector<int> neg(n.size());
    for (size_t i = 0; i < n.size(); ++i) neg[i] = -n[i];
    out.coeffs[neg] = std::conj(c);
  }
  return out;
}

TrigPoly TrigPoly::normalized_sup() const {
  double s = sup_bound();
  TrigPoly out;
  out.m = m;
  if (s == 0.0) return out;
  for (const auto& [n, c] : coeffs) out.coeffs[n] = c / s;
  return out;
}

double BoxIndicator::eval(const Point& x) const {
  for (int i = 0; i < m; ++i) {
    double rel = mod1(x[i] - corner[i]);
    if (rel >= widths[i]) return 0.0;
  }
  return 1.0;
}

double BoxIndicator::volume() const {
  double v = 1.0;
  for (double w : widths) v *= w;
  return v;
}

double SmoothedBox::eval(const Point& x) const {
  double v = 1.0;
  for (int i = 0; i < box.m; ++i) {
    double rel = mod1(x[i] - box.corner[i] + eta / 2.0);  // shift so ramps straddle faces
    double w = box.widths[i];
    double profile;
    if (rel < eta)
      profile = rel / eta;  // rising edge
    else if (rel < w)
      profile = 1.0;
    else if (rel < w + eta)
      profile = 1.0 - (rel - w) / eta;  // falling edge
    else
      profile = 0.0;
    v *= profile;
  }
  return v;
}

Complex observable_eval(const Observable& f, const Point& x) {
  return std::visit(
      [&](const auto& g) -> Complex {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TrigPoly>)
          return g.eval(x);
        else
          return Complex(g.eval(x), 0.0);
      },
      f);
}

Complex observable_integral(const Observable& f) {
  return std::visit(
      [](const auto& g) -> Complex {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, TrigPoly>)
          return g.integral();
        else
          return Complex(g.volume(), 0.0);
      },
      f);
}

int observable_dim(const Observable& f) {
  return std::visit(
      [](const auto& g) -> int {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, SmoothedBox>)
          return g.box.m;
        else
          return g.m;
      },
      f);
}

bool observable_is_constant(const Observable& f) {
  if (!std::holds_alternative<TrigPoly>(f)) return false;
  const auto& g = std::get<TrigPoly>(f);
  for (const auto& [n, c] : g.coeffs)
    for (int v : n)
      if (v != 0) return false;
  return true;
}

Complex product_of_integrals(const std::vector<Observable>& fs) {
  Complex acc(1.0, 0.0);
  for (const auto& f : fs) acc *= observable_integral(f);
  return acc;
}

}  // namespace polyflow
