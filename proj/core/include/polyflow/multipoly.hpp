#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polyflow/coeff.hpp"

namespace polyflow {

/// Degree of the zero polynomial.
inline constexpr int kDegNegInf = std::numeric_limits<int>::min();

/// Graded-lex term order: higher total degree first, ties broken by
/// lexicographically larger exponent vector first. Map iteration is then
/// already the canonical print order.
struct GradedLexGreater {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Sparse multivariate polynomial in d variables over Coeff. No zero
/// coefficients are stored; the zero polynomial has an empty term map.
class MultiPoly {
 public:
  using TermMap = std::map<std::vector<int>, Coeff, GradedLexGreater>;

  explicit MultiPoly(int d = 1) : d_(d) {}

  static MultiPoly constant(int d, const Coeff& c);
  static MultiPoly variable(int d, int index);  // 0-based
  static MultiPoly monomial(int d, const std::vector<int>& exps, const Coeff& c);

  int dim() const { return d_; }
  const TermMap& terms() const { return terms_; }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const Coeff& c) const;
  MultiPoly pow(unsigned e) const;
  bool operator==(const MultiPoly& o) const { return d_ == o.d_ && terms_ == o.terms_; }

  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // kDegNegInf for the zero polynomial
  bool is_constant() const { return degree() <= 0; }
  Coeff constant_term() const;
  MultiPoly without_constant() const;

  // Coefficients (c_1,...,c_d) of a polynomial with degree <= 1; the constant
  // part is ignored.
  std::vector<Coeff> linear_coeffs() const;
  bool is_linear_form() const;  // every stored term has total degree exactly 1

  Coeff eval_coeff(const std::vector<Coeff>& point) const;
  double eval(const std::vector<double>& s, double tau_value) const;
  // Exact evaluation; nullopt if any coefficient involves tau.
  std::optional<Rational> eval_rational(const std::vector<Rational>& s) const;

  // True when q = r * (*this) for a rational r > 0; reports r.
  std::optional<Rational> positive_ratio_to(const MultiPoly& q) const;

  std::string str() const;

  void set_term(const std::vector<int>& exps, const Coeff& c);

 private:
  int d_;
  TermMap terms_;
};

/// Ordered family {p_1, ..., p_k}, all sharing the same variable count.
struct PolyFamily {
  int d = 1;
  std::vector<MultiPoly> polys;

  int size() const { return static_cast<int>(polys.size()); }
  int degree() const;  // max member degree
  std::string str() const;
  bool operator==(const PolyFamily& o) const { return d == o.d && polys == o.polys; }
};

}  // namespace polyflow
