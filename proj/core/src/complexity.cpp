#include "polyflow/complexity.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "polyflow/weights.hpp"

namespace polyflow {

namespace {

struct CoeffLess {
  bool operator()(const Coeff& a, const Coeff& b) const { return a.cmp(b) < 0; }
};

std::vector<Coeff> column_values(const CoeffMatrix& a, const std::vector<Coeff>& gamma) {
  std::vector<Coeff> vals(a.size());
  for (size_t j = 0; j < a.size(); ++j) {
    Coeff acc;
    for (size_t i = 0; i < gamma.size(); ++i) acc += a[j][i] * gamma[i];
    vals[j] = acc;
  }
  return vals;
}

int distinct_nonzero(const std::vector<Coeff>& vals) {
  std::set<Coeff, CoeffLess> s;
  for (const auto& v : vals)
    if (!v.is_zero()) s.insert(v);
  return static_cast<int>(s.size());
}

// gamma as column 1, completed with standard basis columns keeping the
// determinant nonzero (greedy over unit vectors).
CoeffMatrix complete_to_invertible(const std::vector<Coeff>& gamma) {
  const int l = static_cast<int>(gamma.size());
  CoeffMatrix cols;  // collected as columns first
  cols.push_back(gamma);
  CoeffMatrix rows_for_rank;  // columns as rows: rank of column span
  rows_for_rank.push_back(gamma);
  for (int i = 0; i < l && static_cast<int>(cols.size()) < l; ++i) {
    std::vector<Coeff> e(l);
    e[i] = Coeff(1);
    rows_for_rank.push_back(e);
    if (ff_rank(rows_for_rank) == static_cast<int>(rows_for_rank.size())) {
      cols.push_back(e);
    } else {
      rows_for_rank.pop_back();
    }
  }
  CoeffMatrix b(l, std::vector<Coeff>(l));
  for (int c = 0; c < static_cast<int>(cols.size()); ++c)
    for (int r = 0; r < l; ++r) b[r][c] = cols[c][r];
  return b;
}

// Candidate enumeration, in deterministic phases. Emits until the visitor
// returns false or the phases are exhausted.
void enumerate_candidates(int l, int budget,
                          const std::function<bool(const std::vector<Coeff>&)>& visit) {
  int used = 0;
  auto emit = [&](const std::vector<Coeff>& g) {
    if (used >= budget) return false;
    ++used;
    return visit(g);
  };

  auto integer_vectors = [&](int lo, int hi, int skip_abs_le,
                             const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> v(l, lo);
    while (true) {
      bool all_zero = true, all_small = true;
      for (int x : v) {
        if (x != 0) all_zero = false;
        if (std::abs(x) > skip_abs_le) all_small = false;
      }
      bool skip = all_zero || (skip_abs_le > 0 && all_small);
      if (!skip && !f(v)) return false;
      int i = l - 1;
      while (i >= 0 && v[i] == hi) v[i--] = lo;
      if (i < 0) break;
      ++v[i];
    }
    return true;
  };

  auto as_coeffs = [&](const std::vector<int>& v) {
    std::vector<Coeff> g(l);
    for (int i = 0; i < l; ++i) g[i] = Coeff(v[i]);
    return g;
  };

  // Phase 1: {-1,0,1}^l.
  if (!integer_vectors(-1, 1, 0, [&](const std::vector<int>& v) {
        return emit(as_coeffs(v));
      }))
    return;

  // Phase 2: {-2..2}^l minus phase 1.
  if (!integer_vectors(-2, 2, 1, [&](const std::vector<int>& v) {
        return emit(as_coeffs(v));
      }))
    return;

  // Phase 3: per-component tau-monomial scalings of {-1,0,1}^l.
  {
    std::vector<Coeff> scales = {Coeff(1), Coeff::tau(1), Coeff::tau(-1)};
    std::vector<int> pattern(l, 0);
    bool go = true;
    while (go) {
      bool trivial = true;
      for (int p : pattern) trivial = trivial && p == 0;
      if (!trivial) {
        if (!integer_vectors(-1, 1, 0, [&](const std::vector<int>& v) {
              std::vector<Coeff> g(l);
              for (int i = 0; i < l; ++i) g[i] = Coeff(v[i]) * scales[pattern[i]];
              return emit(g);
            }))
          return;
      }
      int i = l - 1;
      while (i >= 0 && pattern[i] == 2) pattern[i--] = 0;
      if (i < 0) go = false; else ++pattern[i];
    }
  }

  // Phase 4: rational scalings of {-2..2}^l.
  for (long den : {2L, 3L}) {
    Coeff scale(Rational(1, den));
    if (!integer_vectors(-2, 2, 0, [&](const std::vector<int>& v) {
          std::vector<Coeff> g(l);
          for (int i = 0; i < l; ++i) g[i] = Coeff(v[i]) * scale;
          return emit(g);
        }))
      return;
  }
}

}  // namespace

std::string bound_rule_name(BoundRule r) {
  switch (r) {
    case BoundRule::prop59: return "prop59";
    case BoundRule::cor56: return "cor56";
    case BoundRule::cor58: return "cor58";
  }
  return "?";
}

bool complexity_zero(const PolyFamily& family) {
  if (!is_nice(family))
    throw std::invalid_argument("complexity_zero: family is not nice");
  return r_independent(family).independent;
}

std::vector<Coeff> lambda1(const PolyFamily& linear_family, int col) {
  CoeffMatrix a = linear_family_matrix(linear_family);
  std::set<Coeff, CoeffLess> s;
  for (const auto& row : a)
    if (!row[col - 1].is_zero()) s.insert(row[col - 1]);
  return {s.begin(), s.end()};
}

std::optional<int> pj_bound_direct(const PolyFamily& linear_family, int j, int col) {
  CoeffMatrix a = linear_family_matrix(linear_family);
  const int k = static_cast<int>(a.size());
  if (j < 1 || j > k) throw std::out_of_range("pj_bound_direct: member index");
  if (col < 1 || col > static_cast<int>(a[0].size()))
    throw std::out_of_range("pj_bound_direct: column index");
  const Coeff& mine = a[j - 1][col - 1];
  if (mine.is_zero()) return std::nullopt;
  for (int i = 0; i < k; ++i)
    if (i != j - 1 && a[i][col - 1] == mine) return std::nullopt;
  std::vector<Coeff> column(k);
  for (int i = 0; i < k; ++i) column[i] = a[i][col - 1];
  return distinct_nonzero(column) - 1;
}

ComplexityCertificate pj_bound_search(const PolyFamily& family, int j, int budget) {
  if (!is_nice(family))
    throw std::invalid_argument("pj_bound_search: family is not nice");
  const int k = family.size();
  if (j < 1 || j > k) throw std::out_of_range("pj_bound_search: member index");

  CoefficientMatrix dec = independent_decomposition(family);
  PolyFamily lin = family_from_matrix(dec.alpha);

  ComplexityCertificate cert;
  cert.j = j;
  cert.linearized = lin.str();
  {
    std::vector<Coeff> first_col(dec.k);
    for (int i = 0; i < dec.k; ++i) first_col[i] = dec.alpha[i][0];
    cert.lambda1_before = distinct_nonzero(first_col);
  }

  if (dec.l == dec.k) {  // R-independent: exact complexity 0
    cert.bound = 0;
    cert.rule = BoundRule::cor58;
    cert.resulting = cert.linearized;
    cert.lambda1_after = cert.lambda1_before;
    return cert;
  }

  // Bound 0 via a column is possible only when p_j lies outside the span of
  // the other members.
  int floor_bound = 1;
  {
    CoeffMatrix others;
    for (int i = 0; i < dec.k; ++i)
      if (i != j - 1) others.push_back(dec.alpha[i]);
    if (ff_rank(others) < ff_rank(dec.alpha)) floor_bound = 0;
  }

  std::optional<int> best;
  std::vector<Coeff> best_gamma;
  enumerate_candidates(dec.l, budget, [&](const std::vector<Coeff>& gamma) {
    std::vector<Coeff> vals = column_values(dec.alpha, gamma);
    if (vals[j - 1].is_zero()) return true;
    for (int i = 0; i < dec.k; ++i)
      if (i != j - 1 && vals[i] == vals[j - 1]) return true;
    int bound = distinct_nonzero(vals) - 1;
    if (!best || bound < *best) {
      best = bound;
      best_gamma = gamma;
    }
    return *best > floor_bound;  // keep searching while improvable
  });

  if (!best) {
    cert.bound = k - 1;  // essentially-distinct cap
    cert.rule = BoundRule::cor56;
    cert.fallback = true;
    cert.resulting = cert.linearized;
    cert.lambda1_after = cert.lambda1_before;
    return cert;
  }

  Substitution sub;
  sub.gamma = best_gamma;
  sub.b = complete_to_invertible(best_gamma);
  sub.det = ff_det(sub.b);
  PolyFamily result = change_of_variables(lin, sub.b);

  cert.bound = *best;
  cert.rule = BoundRule::prop59;
  cert.substitutions.push_back(std::move(sub));
  cert.resulting = result.str();
  cert.lambda1_after = static_cast<int>(lambda1(result, 1).size());
  return cert;
}

FamilyComplexityReport family_complexity_bounds(const PolyFamily& family, int budget) {
  if (!is_nice(family))
    throw std::invalid_argument("family_complexity_bounds: family is not nice");
  FamilyComplexityReport rep;
  rep.family = family.str();
  rep.linearization = independent_decomposition(family);
  rep.independent = (rep.linearization.l == rep.linearization.k);

  const int k = family.size();
  int bound = 0;
  for (int j = 1; j <= k; ++j) {
    rep.per_j.push_back(pj_bound_search(family, j, budget));
    bound = std::max(bound, rep.per_j.back().bound);
  }
  rep.family_bound = std::min(bound, k - 1);
  rep.exact = (rep.family_bound == 0);
  return rep;
}

bool replay_certificate(const ComplexityCertificate& cert, const PolyFamily& family,
                        std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  CoefficientMatrix dec;
  try {
    dec = independent_decomposition(family);
  } catch (const std::exception& e) {
    return fail(std::string("linearization failed: ") + e.what());
  }
  PolyFamily lin = family_from_matrix(dec.alpha);
  if (lin.str() != cert.linearized) {
    // locate the first mismatching member for the report
    PolyFamily recorded;
    std::string detail = "linearized family mismatch";
    for (int i = 0; i < lin.size(); ++i) {
      std::string got = lin.polys[i].str();
      if (cert.linearized.find(got) == std::string::npos) {
        detail += " at member index " + std::to_string(i + 1);
        break;
      }
    }
    return fail(detail);
  }
  if (cert.j < 1 || cert.j > family.size()) return fail("member index out of range");

  switch (cert.rule) {
    case BoundRule::cor58: {
      if (dec.l != dec.k) return fail("cor58 recorded but family is dependent");
      if (cert.bound != 0) return fail("cor58 bound must be 0");
      return true;
    }
    case BoundRule::cor56: {
      if (cert.bound != family.size() - 1) return fail("cor56 bound must be k-1");
      return true;
    }
    case BoundRule::prop59: {
      PolyFamily cur = lin;
      for (const auto& sub : cert.substitutions) {
        if (static_cast<int>(sub.b.size()) != dec.l)
          return fail("substitution has wrong shape");
        for (int r = 0; r < dec.l; ++r)
          if (!(sub.b[r][0] == sub.gamma[r]))
            return fail("gamma is not the first column of B");
        Coeff det = ff_det(sub.b);
        if (!(det == sub.det)) return fail("determinant mismatch");
        if (det.is_zero()) return fail("singular substitution");
        cur = change_of_variables(cur, sub.b);
      }
      if (cur.str() != cert.resulting) return fail("resulting family mismatch");
      auto direct = pj_bound_direct(cur, cert.j, 1);
      if (!direct) return fail("distinguished column no longer qualifies");
      if (*direct != cert.bound) return fail("re-derived bound mismatch");
      if (static_cast<int>(lambda1(cur, 1).size()) != cert.lambda1_after)
        return fail("lambda1 size mismatch");
      return true;
    }
  }
  return fail("unknown rule");
}

}  // namespace polyflow
