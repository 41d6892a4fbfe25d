#ifndef LIEKIT_RATIONAL_HPP
#define LIEKIT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "liekit/errors.hpp"

namespace liekit {

using Integer = mpz_class;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; zero is 0/1. Backed by GMP for arbitrary precision.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(static_cast<signed long>(n)) {}  // NOLINT: implicit by design
  Rational(int n) : value_(static_cast<signed long>(n)) {}   // NOLINT
  Rational(const Integer& n) : value_(n) {}                  // NOLINT

  Rational(long num, long den) : value_(num, den) { normalize(); }
  Rational(const Integer& num, const Integer& den) : value_(num, den) { normalize(); }

  static Rational from_string(const std::string& text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const { return value_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  explicit Rational(const mpq_class& q) : value_(q) {}

  void normalize() {
    if (value_.get_den() == 0) throw Error("Rational: zero denominator");
    value_.canonicalize();
  }

  mpq_class value_;
};

}  // namespace liekit

#endif
