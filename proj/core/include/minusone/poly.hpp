#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "minusone/rational.hpp"

namespace minusone {

/// Polynomial degree. std::nullopt is the degree of the zero polynomial and
/// compares below every finite degree, so it behaves as minus infinity.
using Degree = std::optional<std::size_t>;

/// Dense univariate polynomial over the rationals; coefficient k multiplies
/// x^k. The stored sequence never ends in a zero.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rational> coeffs);
  Poly(std::initializer_list<Rational> coeffs);

  static Poly constant(const Rational& c);
  static Poly monomial(std::size_t k, const Rational& c = Rational(1));
  static Poly x() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  Degree degree() const;
  /// Coefficient of x^k; zero beyond the degree.
  Rational coeff(std::size_t k) const;
  /// Coefficient of the highest power; throws ConsistencyError on zero.
  const Rational& leading() const;
  std::span<const Rational> coeffs() const { return coeffs_; }

  Rational operator()(const Rational& x) const;
  double operator()(double x) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Rational& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly p, const Rational& c) { return p *= c; }
  friend Poly operator*(const Rational& c, Poly p) { return p *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Poly&, const Poly&) = default;

  /// Divides by the leading coefficient.
  Poly monic() const;
  /// p(x^2).
  Poly compose_x2() const;
  /// p(c0 + c1 x).
  Poly compose_affine(const Rational& c0, const Rational& c1) const;
  Poly derivative() const;

  /// Human-readable form such as "x^2 - 1/2x - 1/4".
  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct QuotientRemainder {
  Poly quotient;
  Poly remainder;
};

/// Long division by a nonzero divisor.
QuotientRemainder divide(const Poly& dividend, const Poly& divisor);

struct ParityPair {
  Poly even;
  Poly odd;
};

/// x(x+1)...(x+n-1); 1 for n == 0.
Rational pochhammer(const Rational& x, std::size_t n);

ParityPair parity_split(const Poly& p);

/// p(-x).
Poly reflect(const Poly& p);

/// Terminating Gauss series sum_{k=0}^{-a} (a)_k (b)_k / ((c)_k k!) x^{k*arg_power}.
/// `a` must be a nonpositive integer and `arg_power` 1 or 2. Throws DomainError
/// when a Pochhammer denominator (c)_k vanishes inside the summation range.
Poly terminating_2f1(const Rational& a, const Rational& b, const Rational& c, int arg_power);

/// JSON array of "num/den" strings, lowest degree first.
nlohmann::json to_json(const Poly& p);
Poly poly_from_json(const nlohmann::json& j);

}  // namespace minusone
