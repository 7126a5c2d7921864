#include "polyflow/linalg.hpp"

#include <stdexcept>

namespace polyflow {

namespace {

Coeff exact_div(const Coeff& a, const Coeff& b) {
  Coeff out;
  if (!Coeff::divide_exact(a, b, out))
    throw std::logic_error("fraction-free elimination: inexact division");
  return out;
}

// One fraction-free elimination pass over the leading `cols` columns.
// Returns the rank; `sign_swaps` counts row exchanges.
int bareiss(CoeffMatrix& m, int cols, int* sign_swaps = nullptr) {
  const int rows = static_cast<int>(m.size());
  const int width = rows ? static_cast<int>(m[0].size()) : 0;
  Coeff prev(1);
  int r = 0;
  if (sign_swaps) *sign_swaps = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { pivot = i; break; }
    if (pivot < 0) continue;
    if (pivot != r) {
      std::swap(m[pivot], m[r]);
      if (sign_swaps) ++*sign_swaps;
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < width; ++j)
        m[i][j] = exact_div(m[i][j] * m[r][c] - m[i][c] * m[r][j], prev);
      m[i][c] = Coeff();
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

}  // namespace

CoeffMatrix mat_identity(int n) {
  CoeffMatrix m(n, std::vector<Coeff>(n));
  for (int i = 0; i < n; ++i) m[i][i] = Coeff(1);
  return m;
}

CoeffMatrix mat_mul(const CoeffMatrix& a, const CoeffMatrix& b) {
  const int n = static_cast<int>(a.size());
  const int k = n ? static_cast<int>(a[0].size()) : 0;
  if (k != static_cast<int>(b.size()))
    throw std::invalid_argument("mat_mul: shape mismatch");
  const int m = k ? static_cast<int>(b[0].size()) : 0;
  CoeffMatrix out(n, std::vector<Coeff>(m));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      Coeff acc;
      for (int t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
      out[i][j] = acc;
    }
  return out;
}

int ff_rank(CoeffMatrix m) {
  if (m.empty()) return 0;
  return bareiss(m, static_cast<int>(m[0].size()));
}

Coeff ff_det(const CoeffMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return Coeff(1);
  if (static_cast<int>(m[0].size()) != n)
    throw std::invalid_argument("ff_det: not square");
  CoeffMatrix w = m;
  int swaps = 0;
  int rank = bareiss(w, n, &swaps);
  if (rank < n) return Coeff();
  Coeff det = w[n - 1][n - 1];  // Bareiss: last pivot is the determinant
  return (swaps % 2) ? -det : det;
}

std::optional<std::vector<Coeff>> ff_solve(const CoeffMatrix& a,
                                           const std::vector<Coeff>& b) {
  const int rows = static_cast<int>(a.size());
  if (rows == 0 || rows != static_cast<int>(b.size())) return std::nullopt;
  const int cols = static_cast<int>(a[0].size());

  CoeffMatrix w(rows, std::vector<Coeff>(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) w[i][j] = a[i][j];
    w[i][cols] = b[i];
  }
  int rank = bareiss(w, cols);
  if (rank < cols) return std::nullopt;  // underdetermined
  for (int i = rank; i < rows; ++i)
    if (!w[i][cols].is_zero()) return std::nullopt;  // inconsistent

  // Pivot of row r sits at column pc[r]; with full column rank pc[r] = r.
  std::vector<Coeff> x(cols);
  for (int r = cols - 1; r >= 0; --r) {
    Coeff rhs = w[r][cols];
    for (int j = r + 1; j < cols; ++j) rhs -= w[r][j] * x[j];
    Coeff q;
    if (!Coeff::divide_exact(rhs, w[r][r], q)) return std::nullopt;
    x[r] = q;
  }
  // Verify against the original system (guards the echelon bookkeeping).
  for (int i = 0; i < rows; ++i) {
    Coeff acc;
    for (int j = 0; j < cols; ++j) acc += a[i][j] * x[j];
    if (!(acc == b[i])) return std::nullopt;
  }
  return x;
}

std::optional<CoeffMatrix> ff_inverse(const CoeffMatrix& m) {
  const int n = static_cast<int>(m.size());
  Coeff det = ff_det(m);
  if (det.is_zero()) return std::nullopt;
  CoeffMatrix inv(n, std::vector<Coeff>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      CoeffMatrix minor;
      minor.reserve(n - 1);
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;  // adjugate: transpose of cofactors
        std::vector<Coeff> row;
        row.reserve(n - 1);
        for (int c = 0; c < n; ++c)
          if (c != i) row.push_back(m[r][c]);
        minor.push_back(std::move(row));
      }
      Coeff cof = ff_det(minor);
      if ((i + j) % 2) cof = -cof;
      Coeff q;
      if (!Coeff::divide_exact(cof, det, q)) return std::nullopt;
      inv[i][j] = q;
    }
  return inv;
}

std::optional<std::vector<Coeff>> ff_left_kernel_vector(const CoeffMatrix& rows) {
  const int k = static_cast<int>(rows.size());
  if (k == 0) return std::nullopt;
  const int n = static_cast<int>(rows[0].size());

  // Augment with the identity; a row that eliminates to zero in the leading
  // block carries its dependence combination in the trailing block.
  CoeffMatrix w(k, std::vector<Coeff>(n + k));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < n; ++j) w[i][j] = rows[i][j];
    w[i][n + i] = Coeff(1);
  }
  bareiss(w, n);
  for (int i = 0; i < k; ++i) {
    bool zero = true;
    for (int j = 0; j < n && zero; ++j) zero = w[i][j].is_zero();
    if (zero) {
      std::vector<Coeff> v(w[i].begin() + n, w[i].end());
      return v;
    }
  }
  return std::nullopt;
}

}  // namespace polyflow
