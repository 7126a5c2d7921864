#include "polyflow/multipoly.hpp"

#include <numeric>
#include <stdexcept>

namespace polyflow {

bool GradedLexGreater::operator()(const std::vector<int>& a,
                                  const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

MultiPoly MultiPoly::constant(int d, const Coeff& c) {
  MultiPoly p(d);
  if (!c.is_zero()) p.terms_[std::vector<int>(d, 0)] = c;
  return p;
}

MultiPoly MultiPoly::variable(int d, int index) {
  if (index < 0 || index >= d) throw std::out_of_range("MultiPoly: variable index");
  std::vector<int> e(d, 0);
  e[index] = 1;
  MultiPoly p(d);
  p.terms_[e] = Coeff(1);
  return p;
}

MultiPoly MultiPoly::monomial(int d, const std::vector<int>& exps, const Coeff& c) {
  if (static_cast<int>(exps.size()) != d)
    throw std::invalid_argument("MultiPoly: exponent arity mismatch");
  MultiPoly p(d);
  if (!c.is_zero()) p.terms_[exps] = c;
  return p;
}

void MultiPoly::set_term(const std::vector<int>& exps, const Coeff& c) {
  if (c.is_zero())
    terms_.erase(exps);
  else
    terms_[exps] = c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (d_ != o.d_) throw std::invalid_argument("MultiPoly: dimension mismatch");
  MultiPoly out = *this;
  for (const auto& [e, c] : o.terms_) {
    auto it = out.terms_.find(e);
    if (it == out.terms_.end()) {
      out.terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) out.terms_.erase(it);
    }
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly out(d_);
  for (const auto& [e, c] : terms_) out.terms_[e] = -c;
  return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (d_ != o.d_) throw std::invalid_argument("MultiPoly: dimension mismatch");
  MultiPoly out(d_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      std::vector<int> e(d_);
      for (int i = 0; i < d_; ++i) e[i] = e1[i] + e2[i];
      Coeff p = c1 * c2;
      auto it = out.terms_.find(e);
      if (it == out.terms_.end()) {
        if (!p.is_zero()) out.terms_[e] = p;
      } else {
        it->second += p;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  return out;
}

MultiPoly MultiPoly::scaled(const Coeff& c) const {
  MultiPoly out(d_);
  if (c.is_zero()) return out;
  for (const auto& [e, t] : terms_) out.terms_[e] = t * c;
  return out;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly acc = MultiPoly::constant(d_, Coeff(1));
  for (unsigned i = 0; i < e; ++i) acc = acc * (*this);
  return acc;
}

int MultiPoly::degree() const {
  if (terms_.empty()) return kDegNegInf;
  // graded-lex order: the first key has maximal total degree
  const auto& e = terms_.begin()->first;
  return std::accumulate(e.begin(), e.end(), 0);
}

Coeff MultiPoly::constant_term() const {
  auto it = terms_.find(std::vector<int>(d_, 0));
  return it == terms_.end() ? Coeff() : it->second;
}

MultiPoly MultiPoly::without_constant() const {
  MultiPoly out = *this;
  out.terms_.erase(std::vector<int>(d_, 0));
  return out;
}

std::vector<Coeff> MultiPoly::linear_coeffs() const {
  if (degree() > 1) throw std::invalid_argument("MultiPoly: not linear");
  std::vector<Coeff> out(d_);
  for (const auto& [e, c] : terms_) {
    int total = std::accumulate(e.begin(), e.end(), 0);
    if (total == 0) continue;
    for (int i = 0; i < d_; ++i)
      if (e[i] == 1) out[i] = c;
  }
  return out;
}

bool MultiPoly::is_linear_form() const {
  if (terms_.empty()) return false;
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != 1) return false;
  return true;
}

Coeff MultiPoly::eval_coeff(const std::vector<Coeff>& point) const {
  if (static_cast<int>(point.size()) != d_)
    throw std::invalid_argument("MultiPoly: point arity mismatch");
  Coeff acc;
  for (const auto& [e, c] : terms_) {
    Coeff t = c;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= point[i];
    acc += t;
  }
  return acc;
}

double MultiPoly::eval(const std::vector<double>& s, double tau_value) const {
  double acc = 0.0;
  for (const auto& [e, c] : terms_) {
    double t = c.to_double(tau_value);
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= s[i];
    acc += t;
  }
  return acc;
}

std::optional<Rational> MultiPoly::eval_rational(const std::vector<Rational>& s) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    auto r = c.as_rational();
    if (!r) return std::nullopt;
    Rational t = *r;
    for (int i = 0; i < d_; ++i)
      for (int j = 0; j < e[i]; ++j) t *= s[i];
    acc += t;
  }
  return acc;
}

std::optional<Rational> MultiPoly::positive_ratio_to(const MultiPoly& q) const {
  if (d_ != q.d_ || is_zero() || q.is_zero()) return std::nullopt;
  if (terms_.size() != q.terms_.size()) return std::nullopt;
  std::optional<Rational> ratio;
  auto a = terms_.begin();
  auto b = q.terms_.begin();
  for (; a != terms_.end(); ++a, ++b) {
    if (a->first != b->first) return std::nullopt;
    Coeff r;
    if (!Coeff::divide_exact(b->second, a->second, r)) return std::nullopt;
    auto rr = r.as_rational();
    if (!rr) return std::nullopt;
    if (ratio && !(*ratio == *rr)) return std::nullopt;
    ratio = *rr;
  }
  if (ratio && ratio->sign() > 0) return ratio;
  return std::nullopt;
}

namespace {

std::string monomial_str(const std::vector<int>& e) {
  std::string s;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += "u" + std::to_string(i + 1);
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool lead = true;
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_str(e);
    std::string cs;
    bool neg = false;
    if (mono.empty()) {
      cs = c.needs_parens() ? "(" + c.str() + ")" : c.str();
      if (!c.needs_parens() && cs.size() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
    } else if (c == Coeff(1)) {
      cs = "";
    } else if (c == Coeff(-1)) {
      neg = true;
      cs = "";
    } else if (c.needs_parens()) {
      cs = "(" + c.str() + ")";
    } else {
      cs = c.str();
      if (cs.size() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
    }
    if (lead) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (!cs.empty() && !mono.empty())
      s += cs + "*" + mono;
    else
      s += cs + mono;
    lead = false;
  }
  return s;
}

int PolyFamily::degree() const {
  int b = kDegNegInf;
  for (const auto& p : polys) b = std::max(b, p.degree());
  return b;
}

std::string PolyFamily::str() const {
  std::string s;
  for (size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].str();
  }
  return s;
}

}  // namespace polyflow
