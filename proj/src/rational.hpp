#pragma once

#include <cstdint>
#include <string>

namespace hoburg {

/// Exact rational arithmetic for stencil coefficients.
///
/// Values are kept in lowest terms with a positive denominator.  All
/// intermediates are widened to 128 bits; a result that does not fit back
/// into 64-bit components throws std::overflow_error.  The coefficient
/// tables handled here are small fractions, so overflow indicates a bug
/// rather than a legitimate value.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(long long numerator);  // NOLINT: implicit by design
  Rational(long long numerator, long long denominator);

  long long num() const { return num_; }
  long long den() const { return den_; }

  double to_double() const;
  bool is_zero() const { return num_ == 0; }
  std::string str() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }
  Rational& operator/=(const Rational& b) { return *this = *this / b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  static Rational normalized(__int128 n, __int128 d);

  long long num_ = 0;
  long long den_ = 1;
};

}  // namespace hoburg
