#include "minusone/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "minusone/errors.hpp"

namespace minusone::eigen {
namespace {

constexpr double kCutRadius2 = 0.95 * 0.95;
constexpr double kRelCut = 1e-16;

// Coefficients t_k of 2F1(a, b; c; z) = sum t_k z^k. Stops on an exact zero
// (terminating series) or when the next term at z = 0.95^2 is negligible.
std::vector<double> gauss_series(double a, double b, double c, double scale, std::size_t max_terms) {
  std::vector<double> t;
  double term = scale;
  double partial = 0.0;
  double zk = 1.0;
  for (std::size_t k = 0; k < max_terms; ++k) {
    t.push_back(term);
    partial += term * zk;
    const double kk = static_cast<double>(k);
    const double next = term * (a + kk) * (b + kk) / ((c + kk) * (kk + 1));
    zk *= kCutRadius2;
    if (next == 0.0) break;
    if (std::abs(next * zk) < kRelCut * std::abs(partial)) break;
    term = next;
  }
  return t;
}

bool is_elementary(double beta, double lambda) {
  return std::abs(lambda - 2 * (beta + 1)) <= 1e-14 * std::max(1.0, std::abs(lambda));
}

void require_open_interval(double x) {
  if (!(std::abs(x) < 1.0)) throw DomainError("series solution needs |x| < 1");
}

}  // namespace

EigenSolution build_solution(const ParamPair& p, double lambda, std::size_t max_terms) {
  EigenSolution s;
  s.alpha = p.alpha().to_double();
  s.beta = p.beta().to_double();
  s.lambda = lambda;
  const double shared = (s.alpha + s.beta) / 2 + 1 - lambda / 4;
  s.f_series_coeffs = gauss_series(lambda / 4, shared, (s.alpha + 1) / 2, s.c_coeff, max_terms);
  const double g_scale = -lambda * s.c_coeff / (2 * (s.alpha + 1));
  if (g_scale == 0.0) {
    s.g_series_coeffs = {0.0};
  } else {
    s.g_series_coeffs = gauss_series(1 + lambda / 4, shared, (s.alpha + 3) / 2, g_scale, max_terms);
  }
  s.trunc_terms = std::max(s.f_series_coeffs.size(), s.g_series_coeffs.size());
  return s;
}

Jet evaluate(const EigenSolution& s, double x) {
  require_open_interval(x);
  const double z = x * x;
  Jet j;
  // f = sum f_k x^{2k}; walk powers upward.
  double zk = 1.0;      // x^{2k}
  double zk_m1 = 0.0;   // x^{2k-1}
  double zk_m2 = 0.0;   // x^{2k-2}
  for (std::size_t k = 0; k < s.f_series_coeffs.size(); ++k) {
    const double c = s.f_series_coeffs[k];
    const double kk = static_cast<double>(k);
    j.f += c * zk;
    if (k >= 1) {
      j.f1 += 2 * kk * c * zk_m1;
      j.f2 += 2 * kk * (2 * kk - 1) * c * zk_m2;
    }
    zk_m2 = zk;
    zk_m1 = zk * x;
    zk *= z;
  }
  zk = 1.0;
  for (std::size_t k = 0; k < s.g_series_coeffs.size(); ++k) {
    const double c = s.g_series_coeffs[k];
    const double kk = static_cast<double>(k);
    j.g_over_x += c * zk;
    j.g1 += (2 * kk + 1) * c * zk;
    zk *= z;
  }
  j.g = x * j.g_over_x;
  return j;
}

GeneralValue solve_general(const ParamPair& p, double lambda, double x) {
  require_open_interval(x);
  if (is_elementary(p.beta().to_double(), lambda)) {
    throw DomainError("lambda = 2(beta + 1) is the elementary case; use elementary_case");
  }
  const Jet j = evaluate(build_solution(p, lambda), x);
  return {j.f + j.g, j.f, j.g};
}

double g_from_f(const ParamPair& p, double lambda, double f, double f_prime, double x) {
  const double beta = p.beta().to_double();
  if (is_elementary(beta, lambda)) {
    throw DomainError("g cannot be eliminated at lambda = 2(beta + 1) (elementary case)");
  }
  return (2 * (x * x - 1) * f_prime + lambda * x * f) / (2 * (beta + 1) - lambda);
}

double elementary_case(const ParamPair& p, double x) {
  require_open_interval(x);
  return std::pow(1 - x * x, -(p.beta().to_double() + 1) / 2);
}

double elementary_g_case(const ParamPair& p, double x) {
  require_open_interval(x);
  const double alpha = p.alpha().to_double();
  const double beta = p.beta().to_double();
  return -(beta - 1) / (alpha + 1) * x * std::pow(1 - x * x, -(beta + 1) / 2);
}

namespace {

double ode_lhs(double alpha, double beta, double lambda, double x, double f, double f1, double f2) {
  return 4 * x * (x * x - 1) * f2 + 4 * ((alpha + beta + 3) * x * x - alpha) * f1 +
         lambda * x * (2 * (alpha + beta) + 4 - lambda) * f;
}

void require_residual_domain(double x) {
  if (!(std::abs(x) < 0.95)) throw DomainError("ODE residual is evaluated for |x| < 0.95 only");
}

}  // namespace

double ode_residual(const ParamPair& p, double lambda, double x) {
  require_residual_domain(x);
  const EigenSolution s = build_solution(p, lambda);
  const Jet j = evaluate(s, x);
  return std::abs(ode_lhs(s.alpha, s.beta, lambda, x, j.f, j.f1, j.f2));
}

double elementary_residual(const ParamPair& p, double x) {
  require_residual_domain(x);
  const double alpha = p.alpha().to_double();
  const double beta = p.beta().to_double();
  const double s = (beta + 1) / 2;
  const double w = 1 - x * x;
  const double f = std::pow(w, -s);
  const double f1 = 2 * s * x * std::pow(w, -s - 1);
  const double f2 = 2 * s * std::pow(w, -s - 1) + 4 * s * (s + 1) * x * x * std::pow(w, -s - 2);
  return std::abs(ode_lhs(alpha, beta, 2 * (beta + 1), x, f, f1, f2));
}

ParityResidual parity_system_residual(const ParamPair& p, double lambda, double x) {
  const EigenSolution s = build_solution(p, lambda);
  const Jet j = evaluate(s, x);
  ParityResidual r;
  r.first = j.f1 + x * j.g1 + (1 + s.alpha + s.beta) * j.g - lambda * j.g / 2;
  r.second = x * j.f1 + j.g1 + s.alpha * j.g_over_x + lambda * j.f / 2;
  return r;
}

double eigen_equation_residual(const ParamPair& p, double lambda, double x) {
  const EigenSolution s = build_solution(p, lambda);
  const Jet j = evaluate(s, x);
  const double l0f =
      2 * (1 - x) * (j.f1 - j.g1) + 2 * (s.alpha + s.beta + 1) * j.g - 2 * s.alpha * j.g_over_x;
  return std::abs(l0f - lambda * (j.f + j.g));
}

std::complex<double> second_branch(const ParamPair& p, double lambda, double x) {
  require_open_interval(x);
  const double alpha = p.alpha().to_double();
  const double beta = p.beta().to_double();
  const double c = (3 - alpha) / 2;
  if (c <= 0 && std::floor(c) == c) throw DomainError("second branch undefined: (3 - alpha)/2 is a nonpositive integer");
  const std::vector<double> t = gauss_series((lambda + 2 - 2 * alpha) / 4, (2 * beta + 6 - lambda) / 4, c, 1.0, 400);
  double series = 0.0;
  double zk = 1.0;
  for (double coeff : t) {
    series += coeff * zk;
    zk *= x * x;
  }
  return std::pow(std::complex<double>(x, 0.0), 1 - alpha) * series;
}

SpectrumClass polynomial_spectrum_detect(const ParamPair& p, const Rational& lambda) {
  SpectrumClass out;
  const Rational even_index = -lambda / Rational(4);
  const Rational odd_index =
      (lambda / Rational(2) - p.alpha() - p.beta() - Rational(2)) / Rational(2);
  if (even_index.is_integer() && even_index.sign() >= 0) {
    out.kind = SpectrumKind::even_degree;
    out.degree = 2 * static_cast<std::size_t>(even_index.raw().get_num().get_ui());
  } else if (odd_index.is_integer() && odd_index.sign() >= 0) {
    out.kind = SpectrumKind::odd_degree;
    out.degree = 2 * static_cast<std::size_t>(odd_index.raw().get_num().get_ui()) + 1;
  } else {
    return out;
  }

  const Poly P = explicit_poly(p, *out.degree);
  const EigenSolution s = build_solution(p, lambda.to_double());
  std::vector<double> xs;
  for (int i = -9; i <= 9; ++i) xs.push_back(0.1 * i + 0.0123);
  double anchor_x = xs.front();
  for (double x : xs) {
    if (std::abs(P(x)) > std::abs(P(anchor_x))) anchor_x = x;
  }
  const double ratio = [&] {
    const Jet j = evaluate(s, anchor_x);
    return (j.f + j.g) / P(anchor_x);
  }();
  double scale = 0.0;
  for (double x : xs) {
    const Jet j = evaluate(s, x);
    const double F = j.f + j.g;
    scale = std::max(scale, std::abs(F));
    out.max_deviation = std::max(out.max_deviation, std::abs(F - ratio * P(x)));
  }
  out.max_deviation /= std::max(scale, 1e-300);
  out.proportional_to_explicit = out.max_deviation < 1e-10;
  return out;
}

void write_sample_csv(std::ostream& os, const ParamPair& p, double lambda, std::size_t points) {
  if (points < 2) throw DomainError("sampling needs at least 2 points");
  const EigenSolution s = build_solution(p, lambda);
  const bool elementary = is_elementary(s.beta, lambda);
  os << "x,F,f,g,residual\n";
  const auto old_precision = os.precision(17);
  for (std::size_t i = 0; i < points; ++i) {
    const double x = -0.9 + 1.8 * static_cast<double>(i) / static_cast<double>(points - 1);
    const Jet j = evaluate(s, x);
    const double residual = elementary ? elementary_residual(p, x) : ode_residual(p, lambda, x);
    os << x << ',' << (j.f + j.g) << ',' << j.f << ',' << j.g << ',' << residual << '\n';
  }
  os.precision(old_precision);
}

}  // namespace minusone::eigen
