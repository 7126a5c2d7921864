#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "polyflow/rational.hpp"

namespace polyflow {

/// Exact coefficient: a Laurent polynomial sum r_e * tau^e over one symbolic
/// transcendental tau (bound to pi when values are lowered to doubles).
/// Monomials tau^e are Q-linearly independent, so equality is structural.
/// Division is total only against single-term units r * tau^e; general exact
/// division is available where the quotient stays in the ring.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long n) { if (n != 0) terms_[0] = Rational(n); }  // NOLINT
  Coeff(const Rational& r) { if (!r.is_zero()) terms_[0] = r; }  // NOLINT

  static Coeff tau(int e = 1) { return term(Rational(1), e); }
  static Coeff term(const Rational& r, int e);

  Coeff operator+(const Coeff& o) const;
  Coeff operator-(const Coeff& o) const;
  Coeff operator*(const Coeff& o) const;
  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o) { *this = *this + o; return *this; }
  Coeff& operator-=(const Coeff& o) { *this = *this - o; return *this; }
  Coeff& operator*=(const Coeff& o) { *this = *this * o; return *this; }

  bool operator==(const Coeff& o) const { return terms_ == o.terms_; }

  // Deterministic total order (term-map lexicographic); used for sorting in
  // printouts and distinct-value sets, not for magnitude.
  int cmp(const Coeff& o) const;
  bool operator<(const Coeff& o) const { return cmp(o) < 0; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  std::optional<Rational> as_rational() const;
  // Single-term r * tau^e (a unit of the ring).
  std::optional<std::pair<Rational, int>> as_single_term() const;

  Coeff div_unit(const Coeff& unit) const;  // throws unless unit single-term
  // True and sets out = *this / b when the quotient lies in the ring.
  static bool divide_exact(const Coeff& a, const Coeff& b, Coeff& out);

  double to_double(double tau_value) const;
  std::string str() const;
  // Needs parentheses when printed as a factor of a monomial.
  bool needs_parens() const;

  const std::map<int, Rational>& terms() const { return terms_; }

 private:
  std::map<int, Rational> terms_;  // exponent of tau -> nonzero rational
};

}  // namespace polyflow
