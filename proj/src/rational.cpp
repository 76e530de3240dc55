#include "rational.hpp"

#include <limits>
#include <stdexcept>

namespace hoburg {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    i128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

long long narrow(i128 v) {
  if (v > std::numeric_limits<long long>::max() ||
      v < std::numeric_limits<long long>::min()) {
    throw std::overflow_error("rational component exceeds 64 bits");
  }
  return static_cast<long long>(v);
}

}  // namespace

Rational::Rational(long long numerator) : num_(numerator), den_(1) {}

Rational::Rational(long long numerator, long long denominator) {
  *this = normalized(numerator, denominator);
}

Rational Rational::normalized(i128 n, i128 d) {
  if (d == 0) throw std::invalid_argument("rational with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  if (n == 0) {
    Rational r;
    return r;
  }
  i128 g = gcd128(n, d);
  Rational r;
  r.num_ = narrow(n / g);
  r.den_ = narrow(d / g);
  return r;
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational operator+(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.den_ + i128(b.num_) * a.den_;
  i128 d = i128(a.den_) * b.den_;
  return Rational::normalized(n, d);
}

Rational operator-(const Rational& a, const Rational& b) {
  i128 n = i128(a.num_) * b.den_ - i128(b.num_) * a.den_;
  i128 d = i128(a.den_) * b.den_;
  return Rational::normalized(n, d);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational::normalized(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("rational division by zero");
  return Rational::normalized(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool operator<(const Rational& a, const Rational& b) {
  return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

}  // namespace hoburg
