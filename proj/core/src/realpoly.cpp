#include "polyflow/realpoly.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace polyflow {

RealPoly RealPoly::from(const MultiPoly& p, double tau_value) {
  RealPoly out;
  out.d = p.dim();
  for (const auto& [e, c] : p.terms()) {
    double v = c.to_double(tau_value);
    if (v != 0.0) out.terms.emplace_back(e, v);
  }
  return out;
}

RealPoly RealPoly::monomial(int d, const std::vector<int>& exps, double c) {
  RealPoly out;
  out.d = d;
  if (c != 0.0) out.terms.emplace_back(exps, c);
  return out;
}

double RealPoly::eval(const std::vector<double>& s) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms) {
    double t = c;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < e[i]; ++j) t *= s[i];
    acc += t;
  }
  return acc;
}

bool RealPoly::is_constant() const { return degree() <= 0; }

int RealPoly::degree() const {
  int deg = kDegNegInf;
  for (const auto& [e, c] : terms)
    deg = std::max(deg, std::accumulate(e.begin(), e.end(), 0));
  return deg;
}

std::string RealPoly::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms) {
    if (!first) os << " + ";
    first = false;
    os << c;
    for (int i = 0; i < d; ++i)
      if (e[i]) {
        os << "*u" << (i + 1);
        if (e[i] > 1) os << "^" << e[i];
      }
  }
  if (first) os << "0";
  return os.str();
}

std::vector<RealPoly> lower_family(const PolyFamily& family, double tau_value) {
  std::vector<RealPoly> out;
  out.reserve(family.polys.size());
  for (const auto& p : family.polys) out.push_back(RealPoly::from(p, tau_value));
  return out;
}

}  // namespace polyflow
