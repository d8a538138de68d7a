#include "flexcore/scalar.hpp"

#include <ostream>

#include "flexcore/errors.hpp"

namespace flexcore {

Scalar::Scalar(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw Error("scalar with zero denominator");
  value_ = Rational(num, den);  // cpp_rational normalizes on construction
}

Scalar Scalar::from_string(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Scalar(BigInt(text));
    return Scalar(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
  } catch (const std::exception&) {
    throw Error("malformed scalar literal: '" + text + "'");
  }
}

bool Scalar::is_integer() const {
  return boost::multiprecision::denominator(value_) == 1;
}

BigInt Scalar::numerator() const {
  return boost::multiprecision::numerator(value_);
}

BigInt Scalar::denominator() const {
  return boost::multiprecision::denominator(value_);
}

Scalar Scalar::operator-() const { return Scalar(Rational(-value_)); }

Scalar& Scalar::operator+=(const Scalar& o) {
  value_ += o.value_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  value_ -= o.value_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  value_ *= o.value_;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw Error("scalar division by zero");
  value_ /= o.value_;
  return *this;
}

std::string Scalar::to_string() const {
  if (is_integer()) return numerator().str();
  return numerator().str() + "/" + denominator().str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

Scalar abs(const Scalar& s) { return s.sign() < 0 ? -s : s; }

Scalar pow(const Scalar& base, int exponent) {
  if (exponent < 0) {
    if (base.is_zero()) throw Error("zero base with negative exponent");
    return Scalar(1) / pow(base, -exponent);
  }
  Scalar result(1);
  Scalar b = base;
  int e = exponent;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace flexcore
