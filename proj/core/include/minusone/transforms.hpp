#pragma once

#include <cstddef>
#include <vector>

#include "minusone/little_jacobi.hpp"
#include "minusone/poly.hpp"
#include "minusone/report.hpp"

namespace minusone {

/// Parameters (xi, eta) of the classical Jacobi and generalized Gegenbauer
/// families, both > -1.
class JacobiParams {
 public:
  JacobiParams(Rational xi, Rational eta);
  const Rational& xi() const { return xi_; }
  const Rational& eta() const { return eta_; }
  nlohmann::json to_json() const;

 private:
  Rational xi_;
  Rational eta_;
};

/// Monic Jacobi polynomial orthogonal on [0, 1] with weight x^xi (1-x)^eta.
Poly monic_jacobi_01(const JacobiParams& jp, std::size_t n);

/// Monic Jacobi polynomial on [-1, 1]:
/// 2^n (xi+1)_n / (xi+eta+n+1)_n * 2F1(-n, n+xi+eta+1; xi+1; (1-x)/2).
Poly monic_jacobi_sym(const JacobiParams& jp, std::size_t n);

/// S_{2m} = P_m(x^2), S_{2m+1} = x P_m^{(xi+1, eta)}(x^2) with P from
/// monic_jacobi_01.
Poly symmetric_gegenbauer(const JacobiParams& jp, std::size_t n);

/// (S_{n+1} - A_n S_n) / (x + 1) with A_n = S_{n+1}(-1) / S_n(-1).
/// Throws DomainError if S_n(-1) = 0 and ConsistencyError if the division
/// leaves a remainder.
Poly christoffel_transform(const JacobiParams& jp, std::size_t n);

/// B_n = (2n + (1 - (-1)^n) alpha) / (2 (alpha + beta + 2n)), n >= 1.
Rational geronimus_B(const ParamPair& p, std::size_t n);

/// S_n^{(xi, eta+1)} - B_n S_{n-1}^{(xi, eta+1)} with xi = (alpha-1)/2,
/// eta = (beta-1)/2.
Poly geronimus_combination(const ParamPair& p, std::size_t n);
/// S_n - B_n S_{n-1} over an arbitrary symmetric base family.
Poly geronimus_combination(const ParamPair& p, const JacobiParams& base, std::size_t n);

/// (xi, eta) = ((alpha-1)/2, (beta-1)/2).
JacobiParams gegenbauer_params_for(const ParamPair& p);

/// P_n^{(-1)} (recurrence) against the Geronimus combination.
CheckReport identify_little(const ParamPair& p, std::size_t n);
/// Christoffel transform at (xi, eta) against the Geronimus combination.
CheckReport christoffel_geronimus_check(const ParamPair& p, std::size_t n);

/// T_{alpha/2} P_n^{(alpha,beta)} against [n]_{alpha/2} P_{n-1}^{(alpha,beta+2)}.
CheckReport dunkl_classical_check(const ParamPair& p, std::size_t n);

/// d/dx P_n^{(a,a+1)} against n P_{n-1}^{(a+1,a+2)} on the monic Jacobi
/// family from monic_jacobi_sym.
CheckReport hahn_check(const Rational& a, std::size_t n);

/// nu_n = n + beta - 1 + (1 - (-1)^n) alpha / 2.
Rational raising_nu(const ParamPair& p, std::size_t n);

/// Theta P_n^{(alpha,beta)} against nu_{n+1} P_{n+1}^{(alpha,beta-2)};
/// requires beta > 1.
CheckReport raising_check(const ParamPair& p, std::size_t n);

/// sigma_n^{-1} V_{alpha/2} P_n^{(xi,xi+1)} (xi = (alpha+beta-1)/2) against
/// the recurrence polynomial.
CheckReport proposition2_check(const ParamPair& p, std::size_t n);

/// T_mu S_n^{(xi,eta)} against [n]_mu S_{n-1}^{(xi,eta+1)}, mu = xi + 1/2.
CheckReport gegenbauer_dunkl_check(const JacobiParams& jp, std::size_t n);

struct TildeRecurrence {
  std::vector<Rational> b;  // b_0..b_{n-1}
  std::vector<Rational> u;  // u_1..u_{n-1}, index 0 unused
};

/// Reads off b_k, u_k from a monic family satisfying
/// x P_k = P_{k+1} + b_k P_k + u_k P_{k-1}; throws ConsistencyError if the
/// sequence does not obey a three-term recurrence.
TildeRecurrence recurrence_from_family(const std::vector<Poly>& family);

}  // namespace minusone
