#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "minusone/poly.hpp"
#include "minusone/rational.hpp"

namespace minusone {

/// Family parameters (alpha, beta), both > -1.
class ParamPair {
 public:
  ParamPair(Rational alpha, Rational beta);

  const Rational& alpha() const { return alpha_; }
  const Rational& beta() const { return beta_; }

  nlohmann::json to_json() const;

  friend bool operator==(const ParamPair&, const ParamPair&) = default;

 private:
  Rational alpha_;
  Rational beta_;
};

struct RecurrenceCoeffs {
  /// u_n, absent for n = 0.
  std::optional<Rational> u;
  Rational b;
};

/// u_n and b_n of the monic recurrence P_{n+1} = (x - b_n) P_n - u_n P_{n-1}.
/// At n = 0 with alpha + beta = 0 the removable 0/0 in b_0 is replaced by its
/// limit (alpha + 1)/2.
RecurrenceCoeffs recurrence_coeffs(const ParamPair& p, std::size_t n);

/// -2n for even n, 2(alpha + beta + n + 1) for odd n.
Rational eigenvalue(const ParamPair& p, std::size_t n);

/// Moment sequence c_0..c_M with c_0 = 1.
class MomentFunctional {
 public:
  explicit MomentFunctional(std::vector<Rational> moments);

  std::size_t max_index() const { return moments_.size() - 1; }
  const Rational& operator[](std::size_t k) const;
  const std::vector<Rational>& values() const { return moments_; }

 private:
  std::vector<Rational> moments_;
};

/// c_{2n-1} = c_{2n} = (alpha/2 + 1/2)_n / (alpha/2 + beta/2 + 1)_n.
MomentFunctional moments(const ParamPair& p, std::size_t M);

/// sum_ij p_i q_j c_{i+j}; throws TruncationError if deg p + deg q > M.
Rational inner_product(const MomentFunctional& m, const Poly& p, const Poly& q);

/// Determinant of the (n+1)x(n+1) Hankel matrix [c_{i+j}], exact.
Rational hankel_determinant(const MomentFunctional& m, std::size_t n);

/// Monic P_0..P_n from the three-term recurrence.
std::vector<Poly> generate_family(const ParamPair& p, std::size_t n);
Poly generate_monic(const ParamPair& p, std::size_t n);

/// Monic P_n assembled from the two terminating Gauss series (even and odd
/// degree forms) and rescaled by its leading coefficient.
Poly explicit_poly(const ParamPair& p, std::size_t n);
/// The unnormalized bracket of explicit_poly (constant term 1).
Poly explicit_bracket(const ParamPair& p, std::size_t n);

/// kappa |x|^alpha (1-x^2)^{(beta-1)/2} (1+x) with
/// kappa = Gamma(alpha/2+beta/2+1) / (Gamma(beta/2+1/2) Gamma(alpha/2+1/2)).
/// Throws DomainError outside (-1, 1) and at x = 0 when alpha < 0.
double weight_eval(const ParamPair& p, double x);

/// int_{-1}^{1} x^k w(x) dx by adaptive quadrature.
double weight_moment_quadrature(const ParamPair& p, std::size_t k, double tol = 1e-12);

/// q = -exp(eps), a = -exp(eps alpha), b = -exp(eps beta).
class QDeformation {
 public:
  explicit QDeformation(double epsilon);
  double epsilon() const { return epsilon_; }
  double q() const;
  /// a and b for the given exponents.
  double a(double alpha) const;
  double b(double beta) const;

 private:
  double epsilon_;
};

struct RealRecurrence {
  std::optional<double> u;
  double b;
};

/// Little q-Jacobi recurrence coefficients u_n = A_{n-1} C_n, b_n = A_n + C_n
/// at the deformation point. Throws DomainError when a denominator
/// |1 - a b q^m| drops below 1e-12.
RealRecurrence qjacobi_recurrence(const QDeformation& d, double alpha, double beta, std::size_t n);

struct QLimitError {
  /// |u_n(eps) - u_n|, absent for n = 0.
  std::optional<double> u;
  double b = 0.0;
};

/// Distance between the deformed coefficients and the exact q = -1 ones.
QLimitError qlimit_error(const ParamPair& p, double epsilon, std::size_t n);

/// Rows n = first..last with columns n,u_n,b_n,lambda_n as exact "num/den"
/// strings (u_0 is written empty).
void write_table_csv(std::ostream& os, const ParamPair& p, std::size_t first, std::size_t last);

}  // namespace minusone
