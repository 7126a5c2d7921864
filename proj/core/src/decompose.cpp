#include "polyflow/decompose.hpp"

#include <map>
#include <stdexcept>

namespace polyflow {

namespace {

// Rows of coefficients over the union monomial support, constants stripped.
struct SupportRows {
  std::vector<std::vector<int>> monomials;
  CoeffMatrix rows;  // one row per member
};

SupportRows support_rows(const PolyFamily& family) {
  SupportRows out;
  std::map<std::vector<int>, int> index;
  const std::vector<int> constant(family.d, 0);
  for (const auto& p : family.polys)
    for (const auto& [e, c] : p.terms()) {
      if (e == constant) continue;
      if (!index.count(e)) {
        index[e] = static_cast<int>(out.monomials.size());
        out.monomials.push_back(e);
      }
    }
  out.rows.assign(family.size(), std::vector<Coeff>(out.monomials.size()));
  for (int j = 0; j < family.size(); ++j)
    for (const auto& [e, c] : family.polys[j].terms()) {
      if (e == constant) continue;
      out.rows[j][index.at(e)] = c;
    }
  return out;
}

}  // namespace

std::string IndependenceResult::witness_str() const {
  if (independent) return "";
  std::string s = "(";
  for (size_t i = 0; i < witness.size(); ++i) {
    if (i) s += ", ";
    s += witness[i].str();
  }
  return s + ")";
}

IndependenceResult r_independent(const PolyFamily& family) {
  IndependenceResult out;
  auto sup = support_rows(family);
  if (sup.monomials.empty()) {
    // every member constant: any single member is a dependence
    out.independent = false;
    out.witness.assign(family.size(), Coeff());
    out.witness[0] = Coeff(1);
    return out;
  }
  int rank = ff_rank(sup.rows);
  out.independent = (rank == family.size());
  if (!out.independent) {
    auto v = ff_left_kernel_vector(sup.rows);
    if (v) out.witness = *v;
  }
  return out;
}

std::string CoefficientMatrix::str() const {
  std::string s = "basis {" + basis.str() + "}; rows:";
  for (int j = 0; j < k; ++j) {
    s += " [";
    for (int i = 0; i < l; ++i) {
      if (i) s += ", ";
      s += alpha[j][i].str();
    }
    s += "]";
  }
  return s;
}

CoefficientMatrix independent_decomposition(const PolyFamily& family) {
  CoefficientMatrix out;
  out.k = family.size();
  out.basis.d = family.d;

  for (const auto& p : family.polys)
    if (p.without_constant().is_zero())
      throw std::invalid_argument(
          "independent_decomposition: degenerate family (constant member)");

  out.stripped_constants.reserve(family.size());
  for (const auto& p : family.polys) {
    Coeff c0 = p.constant_term();
    out.stripped_constants.push_back(c0);
    if (!c0.is_zero()) out.had_nonzero_constants = true;
  }

  auto sup = support_rows(family);

  // Greedy first-come maximal independent subfamily.
  CoeffMatrix chosen;
  for (int j = 0; j < family.size(); ++j) {
    chosen.push_back(sup.rows[j]);
    if (ff_rank(chosen) == static_cast<int>(chosen.size())) {
      out.basis_indices.push_back(j);
      out.basis.polys.push_back(family.polys[j].without_constant());
    } else {
      chosen.pop_back();
    }
  }
  out.l = static_cast<int>(out.basis.polys.size());

  // Express every member over the basis: solve basis^T x = member over Q(tau).
  const int cols = static_cast<int>(sup.monomials.size());
  CoeffMatrix basis_t(cols, std::vector<Coeff>(out.l));
  for (int i = 0; i < out.l; ++i)
    for (int c = 0; c < cols; ++c)
      basis_t[c][i] = sup.rows[out.basis_indices[i]][c];

  out.alpha.assign(out.k, std::vector<Coeff>(out.l));
  for (int j = 0; j < out.k; ++j) {
    std::vector<Coeff> rhs(cols);
    for (int c = 0; c < cols; ++c) rhs[c] = sup.rows[j][c];
    auto x = ff_solve(basis_t, rhs);
    if (!x)
      throw std::domain_error(
          "independent_decomposition: coefficients of member " +
          std::to_string(j + 1) + " are not representable in Q[pi, 1/pi]");
    out.alpha[j] = *x;
  }
  return out;
}

PolyFamily family_from_matrix(const CoeffMatrix& alpha) {
  const int k = static_cast<int>(alpha.size());
  const int l = k ? static_cast<int>(alpha[0].size()) : 0;
  PolyFamily fam;
  fam.d = std::max(l, 1);
  for (int j = 0; j < k; ++j) {
    MultiPoly p(fam.d);
    for (int i = 0; i < l; ++i) {
      std::vector<int> e(fam.d, 0);
      e[i] = 1;
      p.set_term(e, alpha[j][i]);
    }
    fam.polys.push_back(p);
  }
  return fam;
}

PolyFamily linearize(const PolyFamily& family) {
  return family_from_matrix(independent_decomposition(family).alpha);
}

CoeffMatrix linear_family_matrix(const PolyFamily& family) {
  CoeffMatrix a;
  a.reserve(family.size());
  for (const auto& p : family.polys) {
    if (p.degree() > 1 || !p.constant_term().is_zero())
      throw std::invalid_argument("expected a family of linear forms");
    a.push_back(p.linear_coeffs());
  }
  return a;
}

PolyFamily change_of_variables(const PolyFamily& linear_family, const CoeffMatrix& b) {
  CoeffMatrix a = linear_family_matrix(linear_family);
  const int l = linear_family.d;
  if (static_cast<int>(b.size()) != l ||
      (l && static_cast<int>(b[0].size()) != l))
    throw std::invalid_argument("change_of_variables: B must be l x l");
  if (ff_det(b).is_zero())
    throw std::invalid_argument("change_of_variables: singular substitution");
  return family_from_matrix(mat_mul(a, b));
}

}  // namespace polyflow
