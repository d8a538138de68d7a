#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <string>
#include <utility>

namespace flexcore {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Invariant: lowest terms, positive denominator;
/// an integer is exactly a value with denominator 1. There is no floating
/// point anywhere in the arithmetic.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int value) : value_(value) {}
  Scalar(long long value) : value_(value) {}
  explicit Scalar(BigInt value) : value_(std::move(value)) {}
  Scalar(const BigInt& num, const BigInt& den);

  // Accepts "-42" and "3/4" style text.
  static Scalar from_string(const std::string& text);

  bool is_zero() const { return value_.is_zero(); }
  bool is_one() const { return value_ == 1; }
  bool is_integer() const;
  int sign() const { return value_.sign(); }
  BigInt numerator() const;
  BigInt denominator() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);  // throws Error on zero divisor

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return !(a == b);
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return a.value_ < b.value_;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) {
    return a.value_ <= b.value_;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return b <= a; }

  // "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  using Rational = boost::multiprecision::cpp_rational;
  explicit Scalar(Rational v) : value_(std::move(v)) {}

  Rational value_;
};

Scalar abs(const Scalar& s);
// Exact power; negative exponents require a nonzero base.
Scalar pow(const Scalar& base, int exponent);

}  // namespace flexcore
