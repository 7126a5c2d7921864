#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

namespace polyflow {

using Point = std::vector<double>;

double mod1(double x);

// Continued-fraction rationality probe: p/q with q <= max_den reproducing x
// to ~1e-12, if any. Ergodicity guards are heuristic at the numeric level.
std::optional<std::pair<long, long>> rational_approx(double x, long max_den = 1000000);

/// Rotation flow on T^m: T_t(x) = x + t * gamma (mod 1 componentwise).
struct TorusFlow {
  int m = 1;
  std::vector<double> gamma;

  Point apply(double t, const Point& x) const;
  // All coordinates of gamma irrational (necessary for ergodicity; exact
  // rational independence is not decidable from doubles).
  bool ergodic_hint() const;
};

/// Heisenberg point in coordinates (x, y, z) with group law
/// (x,y,z)*(x',y',z') = (x+x', y+y', z+z'+x*y'); lattice = integer triples.
struct HeisPoint {
  double x = 0, y = 0, z = 0;
};

/// Nilflow on the Heisenberg manifold: a_t = (alpha t, beta t,
/// zeta t + alpha beta t^2 / 2), acting by left multiplication.
struct HeisenbergFlow {
  double alpha = 1, beta = 1, zeta = 0;

  static HeisPoint mul(const HeisPoint& a, const HeisPoint& b);
  // Reduce into [0,1)^3 by right multiplication with lattice elements:
  // first (-floor x, 0, 0), then (0, -floor y, 0), then (0, 0, -floor z').
  static HeisPoint reduce(HeisPoint g);

  HeisPoint one_param(double t) const;
  HeisPoint apply(double t, const HeisPoint& g) const;

  // Projection to the maximal factor torus (x, y) intertwines with this.
  TorusFlow base_torus() const { return TorusFlow{2, {alpha, beta}}; }
  bool ergodic_base_hint() const;
};

using Flow = std::variant<TorusFlow, HeisenbergFlow>;

// Uniform apply: torus points are length-m, Heisenberg points length-3.
Point flow_apply(const Flow& flow, double t, const Point& x);
int flow_dim(const Flow& flow);

}  // namespace polyflow
