#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <vector>

#include "minusone/banded_op.hpp"
#include "minusone/poly.hpp"
#include "minusone/rational.hpp"

namespace minusone::susy {

/// Well parameter a > 1/2; beta = 2a + 1 links to the alpha = 0 family.
class SchrodingerParams {
 public:
  explicit SchrodingerParams(Rational a);
  const Rational& exact() const { return a_; }
  double a() const { return value_; }

 private:
  Rational a_;
  double value_;
};

/// Value and first two derivatives of a function of y at one point.
struct Jet {
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
};

using JetFn = std::function<Jet(double)>;

constexpr double kDefaultMargin = 1e-3;

/// Strictly increasing grid in (-pi/2 + margin, pi/2 - margin) with its
/// endpoints included.
struct WaveSample {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> derivative_values;
};

std::vector<double> make_grid(std::size_t points, double margin = kDefaultMargin);

/// (a + 1/2)(a + 1/2 - sin y) / cos^2 y, without the -(a+1)^2 shift.
double potential(const SchrodingerParams& a, double y);

/// sqrt(1 + sin y) cos^{a+1/2} y with analytic derivatives.
Jet ground_state(const SchrodingerParams& a, double y);

/// Phi(y) p(sin y) with analytic derivatives; `s_coeffs` are the power
/// coefficients of p in s = sin y.
JetFn phi_times_poly(const SchrodingerParams& a, std::vector<double> s_coeffs);

/// Coefficients in s of 2F1(-n, n + 2a + 2; a + 1; (1 - s)/2), exact.
Poly wavefunction_poly(const SchrodingerParams& a, std::size_t n);

JetFn wavefunction_fn(const SchrodingerParams& a, std::size_t n);
double wavefunction(const SchrodingerParams& a, std::size_t n, double y);
WaveSample sample_wavefunction(const SchrodingerParams& a, std::size_t n, const std::vector<double>& grid);

/// (a + n + 1)^2.
double energy(const SchrodingerParams& a, std::size_t n);

/// (d/dy - (a+1/2)/cos y) R_y f  =  -f'(-y) - (a+1/2) f(-y) / cos y.
double apply_L1(const SchrodingerParams& a, const JetFn& f, double y);
/// L1 f as a function carrying its first derivative (d2 is not available).
JetFn L1_fn(const SchrodingerParams& a, JetFn f);

/// -f''(y) + U(y) f(y).
double apply_H1(const SchrodingerParams& a, const JetFn& f, double y);

struct FactorizationReport {
  bool holds = false;
  /// Worst scaled residual of each condition across the samples:
  /// 2chi' = U(y) - U(-y), 2chi^2 = U(y) + U(-y) + 2C,
  /// chi^2 - chi' = U(-y) + C, chi^2 + chi' = U(y) + C.
  double odd_part = 0.0;
  double even_part = 0.0;
  double factorized = 0.0;
  double refactorized = 0.0;
  double tolerance = 1e-10;
};

/// Residuals are divided by max(1, |U(y)| + |U(-y)|).
FactorizationReport factorization_check(const JetFn& chi, const std::function<double(double)>& U, double C,
                                        const std::vector<double>& ys, double tolerance = 1e-10);

/// The superpotential -(a + 1/2)/cos y of L1.
JetFn well_superpotential(const SchrodingerParams& a);

struct NumericCheck {
  bool holds = false;
  double worst = 0.0;
  double tolerance = 0.0;
};

/// R_y L1 psi_n (y) = (L1 psi_n)(-y) against (-1)^{n+1} (a+n+1) psi_n(-y),
/// relative to max |psi_n| on the samples.
NumericCheck darboux_flip(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                          double tolerance = 1e-8);

/// H1 (Phi p(sin y)) against Phi ((a+1)^2 p - S0 p)(sin y), with S0 p computed
/// exactly by make_S0.
NumericCheck conjugation_check(const SchrodingerParams& a, const Poly& p, const std::vector<double>& ys,
                               double tolerance = 1e-8);

/// L1 psi_n against (-1)^{n+1}(a+n+1) psi_n, relative to max |psi_n|.
NumericCheck L1_eigen_check(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                            double tolerance = 1e-8);
/// H1 psi_n against E_n psi_n, relative to max |psi_n|.
NumericCheck H1_eigen_check(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                            double tolerance = 1e-8);
/// L1 (L1 f) against H1 f, relative to max |H1 f|.
NumericCheck square_root_check(const SchrodingerParams& a, const JetFn& f, const std::vector<double>& ys,
                               double tolerance = 1e-8);

struct CommutingPairReport {
  OpIdentityReport commute;   // [L0, S0] = 0
  OpIdentityReport relation;  // L0^2 - 4(1+a) L0 + 4 S0 = 0
  bool holds() const { return commute.holds && relation.holds; }
};

/// Exact check with L0 at alpha = 0, beta = 2a + 1, truncated at N.
CommutingPairReport commuting_pair_check(const Rational& a, std::size_t N);

std::size_t sign_changes(const std::vector<double>& values);

/// y,U,psi_0..psi_n.
void write_sample_csv(std::ostream& os, const SchrodingerParams& a, std::size_t max_level, std::size_t points);

}  // namespace minusone::susy
