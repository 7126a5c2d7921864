#include "polyflow/coeff.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace polyflow {

Coeff Coeff::term(const Rational& r, int e) {
  Coeff c;
  if (!r.is_zero()) c.terms_[e] = r;
  return c;
}

Coeff Coeff::operator+(const Coeff& o) const {
  Coeff out = *this;
  for (const auto& [e, r] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_[e] = r;
    } else {
      it->second += r;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

Coeff Coeff::operator-() const {
  Coeff out;
  for (const auto& [e, r] : terms_) out.terms_[e] = -r;
  return out;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
  Coeff out;
  for (const auto& [e1, r1] : terms_)
    for (const auto& [e2, r2] : o.terms_) {
      Rational p = r1 * r2;
      auto it = out.terms_.find(e1 + e2);
      if (it == out.terms_.end()) {
        if (!p.is_zero()) out.terms_[e1 + e2] = p;
      } else {
        it->second += p;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

int Coeff::cmp(const Coeff& o) const {
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end() && b != o.terms_.end(); ++a, ++b) {
    if (a->first != b->first) return a->first < b->first ? -1 : 1;
    auto c = a->second <=> b->second;
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a != terms_.end()) return 1;
  if (b != o.terms_.end()) return -1;
  return 0;
}

bool Coeff::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

std::optional<Rational> Coeff::as_rational() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first == 0) return terms_.begin()->second;
  return std::nullopt;
}

std::optional<std::pair<Rational, int>> Coeff::as_single_term() const {
  if (terms_.size() != 1) return std::nullopt;
  return std::make_pair(terms_.begin()->second, terms_.begin()->first);
}

Coeff Coeff::div_unit(const Coeff& unit) const {
  auto u = unit.as_single_term();
  if (!u) throw std::domain_error("Coeff: division only by single-term units");
  Coeff out;
  for (const auto& [e, r] : terms_) out.terms_[e - u->second] = r / u->first;
  return out;
}

bool Coeff::divide_exact(const Coeff& a, const Coeff& b, Coeff& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) { out = Coeff(); return true; }
  if (auto u = b.as_single_term()) { out = a.div_unit(b); return true; }

  // Long division of Laurent polynomials: shift off the lowest exponents,
  // divide the ordinary polynomials, require zero remainder.
  const int alo = a.terms_.begin()->first;
  const int blo = b.terms_.begin()->first;
  const int ahi = a.terms_.rbegin()->first;
  const int bhi = b.terms_.rbegin()->first;
  const int adeg = ahi - alo, bdeg = bhi - blo;
  if (adeg < bdeg) return false;

  std::vector<Rational> num(adeg + 1), den(bdeg + 1);
  for (const auto& [e, r] : a.terms_) num[e - alo] = r;
  for (const auto& [e, r] : b.terms_) den[e - blo] = r;

  std::vector<Rational> quot(adeg - bdeg + 1);
  for (int d = adeg - bdeg; d >= 0; --d) {
    Rational q = num[d + bdeg] / den[bdeg];
    quot[d] = q;
    if (q.is_zero()) continue;
    for (int i = 0; i <= bdeg; ++i) num[d + i] -= q * den[i];
  }
  for (int i = 0; i < bdeg; ++i)
    if (!num[i].is_zero()) return false;

  Coeff result;
  const int off = alo - blo;
  for (int d = 0; d < static_cast<int>(quot.size()); ++d)
    if (!quot[d].is_zero()) result.terms_[d + off] = quot[d];
  out = result;
  return true;
}

double Coeff::to_double(double tau_value) const {
  double acc = 0.0;
  for (const auto& [e, r] : terms_) acc += r.to_double() * std::pow(tau_value, e);
  return acc;
}

namespace {

std::string term_str(const Rational& r, int e, bool lead) {
  std::string s;
  Rational a = r.abs();
  bool neg = r.sign() < 0;
  if (lead) {
    if (neg) s += "-";
  } else {
    s += neg ? " - " : " + ";
  }
  if (e == 0) {
    s += a.str();
  } else {
    if (!(a == Rational(1))) s += a.str() + "*";
    s += "pi";
    if (e != 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string Coeff::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool lead = true;
  // print high powers first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    s += term_str(it->second, it->first, lead);
    lead = false;
  }
  return s;
}

bool Coeff::needs_parens() const { return terms_.size() > 1; }

}  // namespace polyflow
