#pragma once

#include <complex>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "polyflow/flows.hpp"

namespace polyflow {

using Complex = std::complex<double>;

/// Finite trigonometric polynomial on T^m: sum over integer frequency
/// vectors n of c_n e^{2 pi i n.x}.
struct TrigPoly {
  int m = 1;
  std::map<std::vector<int>, Complex> coeffs;

  static TrigPoly character(const std::vector<int>& freq);
  static TrigPoly constant(int m, Complex c);

  Complex eval(const Point& x) const;
  Complex integral() const;       // constant coefficient
  double sup_bound() const;       // sum of |c_n| >= sup norm
  TrigPoly conjugate() const;
  TrigPoly normalized_sup() const;  // scaled so sup_bound() == 1
};

/// Indicator of a half-open box on the torus, coordinates wrapped mod 1.
struct BoxIndicator {
  int m = 1;
  std::vector<double> corner, widths;

  double eval(const Point& x) const;
  double volume() const;
};

/// Box indicator with linear ramps of width eta centered on each face, so
/// the integral still equals the box volume.
struct SmoothedBox {
  BoxIndicator box;
  double eta = 0.01;

  double eval(const Point& x) const;
  double volume() const { return box.volume(); }
};

using Observable = std::variant<TrigPoly, BoxIndicator, SmoothedBox>;

Complex observable_eval(const Observable& f, const Point& x);
Complex observable_integral(const Observable& f);
int observable_dim(const Observable& f);
bool observable_is_constant(const Observable& f);

// Exact product of the closed-form integrals.
Complex product_of_integrals(const std::vector<Observable>& fs);

}  // namespace polyflow
