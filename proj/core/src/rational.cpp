#include "polyflow/rational.hpp"

#include <cmath>

namespace polyflow {

Rational Rational::from_string(const std::string& text) {
  std::string s = text;
  // strip spaces
  std::string clean;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) clean.push_back(c);
  if (clean.empty()) throw std::invalid_argument("Rational: empty string");

  auto dot = clean.find('.');
  if (dot != std::string::npos) {
    bool neg = clean[0] == '-';
    std::string digits = clean;
    if (neg || clean[0] == '+') digits = clean.substr(1);
    auto d2 = digits.find('.');
    std::string intpart = digits.substr(0, d2);
    std::string frac = digits.substr(d2 + 1);
    if (intpart.empty()) intpart = "0";
    for (char c : intpart + frac)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw std::invalid_argument("Rational: bad decimal '" + text + "'");
    mpz_class num(intpart + frac);
    mpz_class den = 1;
    for (size_t i = 0; i < frac.size(); ++i) den *= 10;
    mpq_class q(num, den);
    q.canonicalize();
    if (neg) q = -q;
    return Rational(q);
  }

  mpq_class q;
  if (q.set_str(clean, 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + text + "'");
  if (q.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q.canonicalize();
  return Rational(q);
}

Rational Rational::from_double_snapped(double x, long denom) {
  if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
  double scaled = std::round(x * static_cast<double>(denom));
  mpz_class num;
  mpz_set_d(num.get_mpz_t(), scaled);
  mpq_class q(num, mpz_class(denom));
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::floor() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  return Rational(mpq_class(f));
}

long Rational::floor_long() const {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
  if (!f.fits_slong_p()) throw std::overflow_error("Rational: floor overflows long");
  return f.get_si();
}

}  // namespace polyflow
