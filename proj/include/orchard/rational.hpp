#pragma once

// Exact rational scalar.
//
// Thin value wrapper around GMP's mpq_class.  Every operator returns a
// materialized Rational (gmpxx's lazy expression templates would otherwise
// leak into deduced types and fight Eigen's own expression machinery).
// Parsing/printing uses the plain "p/q" | "p" form used by the JSON point
// schema.

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

#include "orchard/errors.hpp"

namespace orchard {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}  // NOLINT: implicit by design (Eigen literals)
  Rational(long n) : v_(static_cast<long int>(n)) {}
  Rational(long long n) { v_ = from_int64(n); }
  Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
  Rational(long long num, long long den);

  // Parses "p", "+p", "-p", "p/q" (sign allowed on either part).
  static Rational parse(const std::string& text);

  std::string str() const { return v_.get_str(); }
  double approx() const { return v_.get_d(); }  // presentation only
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  const mpq_class& raw() const { return v_; }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    Rational r(a);
    r /= b;
    return r;
  }
  friend Rational operator-(const Rational& a) {
    return Rational(mpq_class(-a.v_));
  }
  friend Rational operator+(const Rational& a) { return a; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.v_ != b.v_;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.v_ > b.v_;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.v_ >= b.v_;
  }

  friend Rational abs(const Rational& a) {
    return Rational(mpq_class(abs(a.v_)));
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a);

 private:
  static mpq_class from_int64(long long n);
  mpq_class v_;
};

}  // namespace orchard
