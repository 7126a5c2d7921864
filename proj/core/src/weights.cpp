#include "polyflow/weights.hpp"

#include <numeric>
#include <stdexcept>

namespace polyflow {

std::string WeightVector::str() const {
  std::string s = "(";
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts[i]);
  }
  return s + ")";
}

bool equivalent(const MultiPoly& p, const MultiPoly& q) {
  if (p.dim() != q.dim()) throw std::invalid_argument("equivalent: dimension mismatch");
  int dp = p.degree(), dq = q.degree();
  if (dp <= 0 && dq <= 0) return true;  // constants (incl. zero) all equivalent
  if (dp != dq) return false;
  return (p - q).degree() < dp;
}

WeightVector weight_vector(const PolyFamily& family) {
  const int k = family.size();
  for (const auto& p : family.polys)
    if (p.is_constant())
      throw std::invalid_argument("weight_vector: constant member");

  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (equivalent(family.polys[i], family.polys[j])) {
        int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }

  int b = family.degree();
  WeightVector w;
  w.counts.assign(b, 0);
  for (int i = 0; i < k; ++i)
    if (find(i) == i) w.counts[family.polys[i].degree() - 1]++;
  return w;
}

bool weight_less(const WeightVector& a, const WeightVector& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree() - 1; i >= 0; --i) {
    if (a.counts[i] != b.counts[i]) return a.counts[i] < b.counts[i];
  }
  return false;
}

bool is_nice(const PolyFamily& family) {
  const int k = family.size();
  for (const auto& p : family.polys)
    if (p.is_constant()) return false;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if ((family.polys[i] - family.polys[j]).is_constant()) return false;
  return true;
}

bool is_standard(const PolyFamily& family) {
  return is_nice(family) && !family.polys.empty() &&
         family.polys.front().degree() == family.degree();
}

}  // namespace polyflow
