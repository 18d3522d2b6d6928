#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "minusone/errors.hpp"

namespace minusone {

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Division by zero throws DomainError instead of trapping.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rational(std::int64_t num, std::int64_t den);
  explicit Rational(mpq_class value);

  /// Parses "p", "p/q" or "-p/q" (decimal integers, no whitespace).
  static Rational parse(std::string_view text);

  const mpq_class& raw() const { return value_; }

  std::string numerator_str() const;
  std::string denominator_str() const;
  /// "num/den", or just "num" for integers.
  std::string str() const;
  double to_double() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);
/// r^k for integer k >= 0.
Rational pow(const Rational& r, unsigned k);
/// (-1)^n as a Rational.
Rational sign_power(std::int64_t n);

}  // namespace minusone
