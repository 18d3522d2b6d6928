#include "minusone/little_jacobi.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "minusone/errors.hpp"
#include "minusone/quadrature.hpp"

namespace minusone {
namespace {

Rational from_size(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

double log_kappa(double alpha, double beta) {
  return std::lgamma(alpha / 2 + beta / 2 + 1) - std::lgamma(beta / 2 + 0.5) - std::lgamma(alpha / 2 + 0.5);
}

// w from its factors, so callers near x = +-1 can pass 1 - x^2 without cancellation.
double weight_parts(double log_k, double alpha, double beta, double abs_x, double one_minus_x2,
                    double one_plus_x) {
  return std::exp(log_k + alpha * std::log(abs_x) + 0.5 * (beta - 1) * std::log(one_minus_x2)) * one_plus_x;
}

}  // namespace

ParamPair::ParamPair(Rational alpha, Rational beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_ <= Rational(-1)) throw DomainError("alpha must be > -1, got " + alpha_.str());
  if (beta_ <= Rational(-1)) throw DomainError("beta must be > -1, got " + beta_.str());
}

nlohmann::json ParamPair::to_json() const { return {{"alpha", alpha_.str()}, {"beta", beta_.str()}}; }

RecurrenceCoeffs recurrence_coeffs(const ParamPair& p, std::size_t n) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational nn = from_size(n);
  const bool even = n % 2 == 0;
  const Rational s = even ? Rational(1) : Rational(-1);

  RecurrenceCoeffs out;
  if (n >= 1) {
    // theta_n = 1 for even n.
    const Rational first = even ? nn : nn + a;
    const Rational second = even ? nn + b + a : nn + b;
    const Rational d = Rational(2) * nn + a + b;
    out.u = first * second / (d * d);
  }
  const Rational d0 = Rational(2) * nn + a + b;
  if (n == 0 && d0.is_zero()) {
    out.b = (a + Rational(1)) / Rational(2);
  } else {
    const Rational num = (Rational(2) * nn + Rational(1)) * a + a * b + a * a + s * b;
    out.b = s * num / (d0 * (d0 + Rational(2)));
  }
  return out;
}

Rational eigenvalue(const ParamPair& p, std::size_t n) {
  const Rational nn = from_size(n);
  if (n % 2 == 0) return Rational(-2) * nn;
  return Rational(2) * (p.alpha() + p.beta() + nn + Rational(1));
}

MomentFunctional::MomentFunctional(std::vector<Rational> moments) : moments_(std::move(moments)) {
  if (moments_.empty() || moments_.front() != Rational(1)) {
    throw DomainError("moment sequence must start with c_0 = 1");
  }
}

const Rational& MomentFunctional::operator[](std::size_t k) const {
  if (k >= moments_.size()) {
    throw TruncationError("moment c_" + std::to_string(k) + " requested but only c_0..c_" +
                          std::to_string(max_index()) + " are stored");
  }
  return moments_[k];
}

MomentFunctional moments(const ParamPair& p, std::size_t M) {
  const Rational half(1, 2);
  const Rational top = p.alpha() * half + half;
  const Rational bottom = p.alpha() * half + p.beta() * half + Rational(1);
  std::vector<Rational> c(M + 1);
  c[0] = Rational(1);
  Rational ratio(1);
  for (std::size_t m = 1; 2 * m - 1 <= M; ++m) {
    ratio *= (top + from_size(m - 1)) / (bottom + from_size(m - 1));
    c[2 * m - 1] = ratio;
    if (2 * m <= M) c[2 * m] = ratio;
  }
  return MomentFunctional(std::move(c));
}

Rational inner_product(const MomentFunctional& m, const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return Rational(0);
  if (*p.degree() + *q.degree() > m.max_index()) {
    throw TruncationError("inner product needs c_" + std::to_string(*p.degree() + *q.degree()) +
                          " but only c_0..c_" + std::to_string(m.max_index()) + " are stored");
  }
  Rational acc(0);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < q.coeffs().size(); ++j) acc += p.coeffs()[i] * q.coeffs()[j] * m[i + j];
  }
  return acc;
}

Rational hankel_determinant(const MomentFunctional& m, std::size_t n) {
  const std::size_t dim = n + 1;
  std::vector<std::vector<Rational>> a(dim, std::vector<Rational>(dim));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) a[i][j] = m[i + j];
  }
  Rational det(1);
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot][col].is_zero()) ++pivot;
    if (pivot == dim) return Rational(0);
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < dim; ++r) {
      if (a[r][col].is_zero()) continue;
      const Rational f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < dim; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

std::vector<Poly> generate_family(const ParamPair& p, std::size_t n) {
  std::vector<Poly> out;
  out.reserve(n + 1);
  out.push_back(Poly::constant(Rational(1)));
  for (std::size_t k = 0; k < n; ++k) {
    const RecurrenceCoeffs rc = recurrence_coeffs(p, k);
    Poly next = Poly({-rc.b, Rational(1)}) * out[k];
    if (k >= 1) next -= out[k - 1] * *rc.u;
    out.push_back(std::move(next));
  }
  return out;
}

Poly generate_monic(const ParamPair& p, std::size_t n) { return generate_family(p, n).back(); }

Poly explicit_bracket(const ParamPair& p, std::size_t n) {
  const Rational& a = p.alpha();
  const Rational& b = p.beta();
  const Rational nn = from_size(n);
  const Rational half(1, 2);
  const Rational c1 = (a + Rational(1)) * half;
  const Rational c3 = (a + Rational(3)) * half;
  const Poly x = Poly::x();
  if (n % 2 == 0) {
    const Rational m = nn * half;
    const Rational upper = (nn + a + b + Rational(2)) * half;
    Poly out = terminating_2f1(-m, upper, c1, 2);
    if (n >= 2) out += x * terminating_2f1(Rational(1) - m, upper, c3, 2) * (nn / (a + Rational(1)));
    return out;
  }
  const Rational lower = (Rational(1) - nn) * half;
  Poly out = terminating_2f1(lower, (nn + a + b + Rational(1)) * half, c1, 2);
  out -= x * terminating_2f1(lower, (nn + a + b + Rational(3)) * half, c3, 2) *
         ((a + b + nn + Rational(1)) / (a + Rational(1)));
  return out;
}

Poly explicit_poly(const ParamPair& p, std::size_t n) {
  const Poly bracket = explicit_bracket(p, n);
  if (bracket.degree() != Degree(n)) {
    throw ConsistencyError("explicit form of degree " + std::to_string(n) + " has a vanishing leading coefficient");
  }
  return bracket.monic();
}

double weight_eval(const ParamPair& p, double x) {
  if (!(x > -1.0 && x < 1.0)) throw DomainError("weight is defined on (-1, 1) only");
  const double alpha = p.alpha().to_double();
  const double beta = p.beta().to_double();
  if (x == 0.0) {
    if (alpha < 0) throw DomainError("weight is singular at x = 0 for alpha < 0");
    if (alpha > 0) return 0.0;
    return std::exp(log_kappa(alpha, beta));
  }
  return weight_parts(log_kappa(alpha, beta), alpha, beta, std::abs(x), (1 - x) * (1 + x), 1 + x);
}

double weight_moment_quadrature(const ParamPair& p, std::size_t k, double tol) {
  const double alpha = p.alpha().to_double();
  const double beta = p.beta().to_double();
  const double lk = log_kappa(alpha, beta);
  const double kk = static_cast<double>(k);
  const double t_max = std::sqrt(0.5);

  // Four pieces, each mapped so the singular endpoint sits at t = 0 with dx = 2t dt.
  auto near_zero = [&](double sign) {
    return [=](double t) {
      const double x = sign * t * t;
      const double w = weight_parts(lk, alpha, beta, t * t, (1 - x) * (1 + x), 1 + x);
      return std::pow(x, kk) * w * 2 * t;
    };
  };
  auto near_wall = [&](double sign) {
    return [=](double t) {
      const double x = sign * (1 - t * t);
      const double one_minus_x2 = t * t * (2 - t * t);
      const double one_plus_x = sign > 0 ? 2 - t * t : t * t;
      const double w = weight_parts(lk, alpha, beta, std::abs(x), one_minus_x2, one_plus_x);
      return std::pow(x, kk) * w * 2 * t;
    };
  };
  double total = 0.0;
  total += integrate_gk15(near_zero(+1), 0.0, t_max, tol).value;
  total += integrate_gk15(near_zero(-1), 0.0, t_max, tol).value;
  total += integrate_gk15(near_wall(+1), 0.0, t_max, tol).value;
  total += integrate_gk15(near_wall(-1), 0.0, t_max, tol).value;
  return total;
}

QDeformation::QDeformation(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0)) throw DomainError("deformation epsilon must be > 0");
}

double QDeformation::q() const { return -std::exp(epsilon_); }
double QDeformation::a(double alpha) const { return -std::exp(epsilon_ * alpha); }
double QDeformation::b(double beta) const { return -std::exp(epsilon_ * beta); }

RealRecurrence qjacobi_recurrence(const QDeformation& d, double alpha, double beta, std::size_t n) {
  const double q = d.q();
  const double a = d.a(alpha);
  const double b = d.b(beta);
  auto qp = [q](long k) { return std::pow(q, static_cast<double>(k)); };
  auto guarded = [&](long k) {
    const double v = 1 - a * b * qp(k);
    if (std::abs(v) < 1e-12) {
      throw DomainError("near-singular little q-Jacobi denominator 1 - ab q^" + std::to_string(k));
    }
    return v;
  };
  auto A = [&](long m) {
    return qp(m) * (1 - a * qp(m + 1)) * (1 - a * b * qp(m + 1)) / (guarded(2 * m + 1) * guarded(2 * m + 2));
  };
  auto C = [&](long m) {
    return a * qp(m) * (1 - qp(m)) * (1 - b * qp(m)) / (guarded(2 * m + 1) * guarded(2 * m));
  };
  const long m = static_cast<long>(n);
  RealRecurrence out;
  out.b = A(m) + (m == 0 ? 0.0 : C(m));
  if (m >= 1) out.u = A(m - 1) * C(m);
  return out;
}

QLimitError qlimit_error(const ParamPair& p, double epsilon, std::size_t n) {
  const RealRecurrence deformed =
      qjacobi_recurrence(QDeformation(epsilon), p.alpha().to_double(), p.beta().to_double(), n);
  const RecurrenceCoeffs exact = recurrence_coeffs(p, n);
  QLimitError e;
  e.b = std::abs(deformed.b - exact.b.to_double());
  if (deformed.u && exact.u) e.u = std::abs(*deformed.u - exact.u->to_double());
  return e;
}

void write_table_csv(std::ostream& os, const ParamPair& p, std::size_t first, std::size_t last) {
  os << "n,u_n,b_n,lambda_n\n";
  for (std::size_t n = first; n <= last; ++n) {
    const RecurrenceCoeffs rc = recurrence_coeffs(p, n);
    os << n << ',' << (rc.u ? rc.u->str() : std::string()) << ',' << rc.b.str() << ','
       << eigenvalue(p, n).str() << '\n';
  }
}

}  // namespace minusone
