#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyflow {

/// Arbitrary-precision rational number. Always canonical: positive
/// denominator, gcd(|num|, den) = 1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT: implicit by design
  Rational(long n, long d) : v_(n, d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  // Accepts "a", "a/b", and plain decimals like "0.3" (parsed exactly).
  static Rational from_string(const std::string& text);

  // Nearest multiple of 1/denom; used to snap doubles onto the exact lattice.
  static Rational from_double_snapped(double x, long denom = 1000000000L);

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(v_ / o.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  std::strong_ordering operator<=>(const Rational& o) const {
    int c = cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool is_zero() const { return v_ == 0; }
  int sign() const { return sgn(v_); }
  Rational abs() const { return Rational(::abs(v_)); }

  std::string str() const;       // "a" or "a/b"
  double to_double() const { return v_.get_d(); }

  Rational floor() const;        // largest integer <= value
  long floor_long() const;

  const mpq_class& raw() const { return v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace polyflow
