#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace nlc {

using Integer = mpz_class;

// Exact fraction in lowest terms with a positive denominator. This is the
// coefficient field for every divisor, polynomial and linear system in the
// library; there is no floating-point path.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}
  Rational(long n) : value_(n) {}
  Rational(long long n);
  Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

  // Accepts "p" or "p/q" with optional sign; rejects decimals.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Integer floor() const;
  Integer ceil() const;
  Rational abs() const { return Rational(mpq_class(::abs(value_))); }

  // Converts an integral value to long; throws std::overflow_error otherwise.
  long to_long() const;

  std::string str() const;

  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-value_)); }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    return cmp(a.value_, b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_;
};

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
long to_long(const Integer& z);

}  // namespace nlc
