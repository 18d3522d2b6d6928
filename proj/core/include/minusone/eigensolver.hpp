#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "minusone/little_jacobi.hpp"

namespace minusone::eigen {

/// Even/odd parts of the regular solution of L0 F = lambda F with C = 1:
///   f(x) = sum_k f_k x^{2k},        f_0 = 1
///   g(x) = x sum_k g_k x^{2k}.
/// Both series are cut once the next term is below 1e-16 of the partial sum
/// at |x| = 0.95, or at max_terms.
struct EigenSolution {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double c_coeff = 1.0;
  std::vector<double> f_series_coeffs;
  std::vector<double> g_series_coeffs;
  std::size_t trunc_terms = 0;
};

EigenSolution build_solution(const ParamPair& p, double lambda, std::size_t max_terms = 400);

struct Jet {
  double f = 0.0;
  double f1 = 0.0;
  double f2 = 0.0;
  double g = 0.0;
  double g1 = 0.0;
  /// g(x)/x, evaluated from the series so x = 0 is regular.
  double g_over_x = 0.0;
};

/// Series values and term-wise derivatives; throws DomainError for |x| >= 1.
Jet evaluate(const EigenSolution& s, double x);

struct GeneralValue {
  double F = 0.0;
  double f = 0.0;
  double g = 0.0;
};

/// F = f + g at x. Requires |x| < 1 and lambda != 2(beta + 1).
GeneralValue solve_general(const ParamPair& p, double lambda, double x);

/// g = (2(x^2 - 1) f' + lambda x f) / (2(beta + 1) - lambda).
double g_from_f(const ParamPair& p, double lambda, double f, double f_prime, double x);

/// (1 - x^2)^{-(beta+1)/2}, the even part at lambda = 2(beta + 1).
double elementary_case(const ParamPair& p, double x);

/// -(beta - 1)/(alpha + 1) x (1 - x^2)^{-(beta+1)/2}, the odd part at
/// lambda = 2(beta - 1).
double elementary_g_case(const ParamPair& p, double x);

/// |4x(x^2-1) f'' + 4((alpha+beta+3)x^2 - alpha) f' + lambda x (2(alpha+beta)+4-lambda) f|
/// with f from the series. Requires |x| < 0.95.
double ode_residual(const ParamPair& p, double lambda, double x);

/// Same residual with the closed form of elementary_case and lambda = 2(beta + 1).
double elementary_residual(const ParamPair& p, double x);

struct ParityResidual {
  double first = 0.0;   // f' + x g' + (1 + alpha + beta) g - lambda g / 2
  double second = 0.0;  // x f' + g' + alpha g / x + lambda f / 2
};

ParityResidual parity_system_residual(const ParamPair& p, double lambda, double x);

/// |L0 F - lambda F| with L0 F = 2(1-x)(f' - g') + 2(alpha+beta+1) g - 2 alpha g/x.
double eigen_equation_residual(const ParamPair& p, double lambda, double x);

/// The discarded branch x^{1-alpha} 2F1((lambda+2-2alpha)/4, (2beta+6-lambda)/4; (3-alpha)/2; x^2),
/// with the principal complex power for x < 0.
std::complex<double> second_branch(const ParamPair& p, double lambda, double x);

enum class SpectrumKind { even_degree, odd_degree, non_polynomial };

struct SpectrumClass {
  SpectrumKind kind = SpectrumKind::non_polynomial;
  std::optional<std::size_t> degree;
  /// For polynomial lambda: solve_general is a constant multiple of explicit_poly.
  bool proportional_to_explicit = false;
  double max_deviation = 0.0;
};

/// lambda = -4n gives degree 2n; lambda = 2(alpha + beta + 2 + 2n) gives 2n + 1.
SpectrumClass polynomial_spectrum_detect(const ParamPair& p, const Rational& lambda);

/// x,F,f,g,residual on `points` equally spaced x in [-0.9, 0.9].
void write_sample_csv(std::ostream& os, const ParamPair& p, double lambda, std::size_t points);

}  // namespace minusone::eigen
