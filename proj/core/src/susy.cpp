#include "minusone/susy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>

#include "minusone/banded_op.hpp"
#include "minusone/errors.hpp"

namespace minusone::susy {
namespace {

void require_domain(double y) {
  if (!(std::abs(y) < std::numbers::pi / 2)) throw DomainError("y must lie strictly inside (-pi/2, pi/2)");
}

struct PolyJet {
  double p = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
};

PolyJet eval_poly(const std::vector<double>& c, double s) {
  PolyJet out;
  for (std::size_t k = c.size(); k-- > 0;) {
    out.p2 = out.p2 * s + 2 * out.p1;
    out.p1 = out.p1 * s + out.p;
    out.p = out.p * s + c[k];
  }
  return out;
}

std::vector<double> to_doubles(const Poly& p) {
  std::vector<double> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.to_double());
  return out;
}

double l1_eigenvalue(const SchrodingerParams& a, std::size_t n) {
  const double mag = a.a() + static_cast<double>(n) + 1;
  return n % 2 == 0 ? -mag : mag;
}

}  // namespace

SchrodingerParams::SchrodingerParams(Rational a) : a_(std::move(a)), value_(a_.to_double()) {
  if (a_ <= Rational(1, 2)) throw DomainError("well parameter a must be > 1/2, got " + a_.str());
}

std::vector<double> make_grid(std::size_t points, double margin) {
  if (points < 2) throw DomainError("grid needs at least 2 points");
  if (!(margin > 0.0 && margin < std::numbers::pi / 2)) throw DomainError("grid margin out of range");
  const double lo = -std::numbers::pi / 2 + margin;
  const double hi = std::numbers::pi / 2 - margin;
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return g;
}

double potential(const SchrodingerParams& a, double y) {
  require_domain(y);
  const double k = a.a() + 0.5;
  const double c = std::cos(y);
  return k * (k - std::sin(y)) / (c * c);
}

Jet ground_state(const SchrodingerParams& a, double y) {
  require_domain(y);
  const double k = a.a() + 0.5;
  const double s = std::sin(y);
  const double c = std::cos(y);
  const double phi = std::sqrt(1 + s) * std::pow(c, k);
  // Logarithmic derivative of phi and its derivative.
  const double ell = (1 - s) / (2 * c) - k * s / c;
  const double ell1 = (s - 1) / (2 * c * c) - k / (c * c);
  return {phi, phi * ell, phi * (ell1 + ell * ell)};
}

JetFn phi_times_poly(const SchrodingerParams& a, std::vector<double> s_coeffs) {
  return [a, c = std::move(s_coeffs)](double y) {
    const Jet phi = ground_state(a, y);
    const double s = std::sin(y);
    const double co = std::cos(y);
    const PolyJet pj = eval_poly(c, s);
    const double q = pj.p;
    const double q1 = pj.p1 * co;
    const double q2 = pj.p2 * co * co - pj.p1 * s;
    return Jet{phi.value * q, phi.d1 * q + phi.value * q1, phi.d2 * q + 2 * phi.d1 * q1 + phi.value * q2};
  };
}

Poly wavefunction_poly(const SchrodingerParams& a, std::size_t n) {
  const Rational nn(static_cast<std::int64_t>(n));
  const Rational& ex = a.exact();
  return terminating_2f1(-nn, nn + Rational(2) * ex + Rational(2), ex + Rational(1), 1)
      .compose_affine(Rational(1, 2), Rational(-1, 2));
}

JetFn wavefunction_fn(const SchrodingerParams& a, std::size_t n) {
  return phi_times_poly(a, to_doubles(wavefunction_poly(a, n)));
}

double wavefunction(const SchrodingerParams& a, std::size_t n, double y) { return wavefunction_fn(a, n)(y).value; }

WaveSample sample_wavefunction(const SchrodingerParams& a, std::size_t n, const std::vector<double>& grid) {
  const JetFn psi = wavefunction_fn(a, n);
  WaveSample out;
  out.grid = grid;
  for (double y : grid) {
    const Jet j = psi(y);
    if (!std::isfinite(j.value)) throw DomainError("wavefunction sample is not finite");
    out.values.push_back(j.value);
    out.derivative_values.push_back(j.d1);
  }
  return out;
}

double energy(const SchrodingerParams& a, std::size_t n) {
  const double r = a.a() + static_cast<double>(n) + 1;
  return r * r;
}

double apply_L1(const SchrodingerParams& a, const JetFn& f, double y) {
  require_domain(y);
  const Jet r = f(-y);
  return -r.d1 - (a.a() + 0.5) * r.value / std::cos(y);
}

JetFn L1_fn(const SchrodingerParams& a, JetFn f) {
  return [a, f = std::move(f)](double y) {
    require_domain(y);
    const double k = a.a() + 0.5;
    const Jet r = f(-y);
    const double c = std::cos(y);
    const double value = -r.d1 - k * r.value / c;
    const double d1 = r.d2 + k * r.d1 / c - k * r.value * std::sin(y) / (c * c);
    return Jet{value, d1, std::nan("")};
  };
}

double apply_H1(const SchrodingerParams& a, const JetFn& f, double y) {
  const Jet j = f(y);
  return -j.d2 + potential(a, y) * j.value;
}

JetFn well_superpotential(const SchrodingerParams& a) {
  return [k = a.a() + 0.5](double y) {
    require_domain(y);
    const double c = std::cos(y);
    const double s = std::sin(y);
    return Jet{-k / c, -k * s / (c * c), -k * (1 + s * s) / (c * c * c)};
  };
}

FactorizationReport factorization_check(const JetFn& chi, const std::function<double(double)>& U, double C,
                                        const std::vector<double>& ys, double tolerance) {
  FactorizationReport r;
  r.tolerance = tolerance;
  for (double y : ys) {
    const Jet x = chi(y);
    const double up = U(y);
    const double um = U(-y);
    const double scale = std::max(1.0, std::abs(up) + std::abs(um));
    const double sq = x.value * x.value;
    r.odd_part = std::max(r.odd_part, std::abs(2 * x.d1 - (up - um)) / scale);
    r.even_part = std::max(r.even_part, std::abs(2 * sq - (up + um + 2 * C)) / scale);
    r.factorized = std::max(r.factorized, std::abs(sq - x.d1 - (um + C)) / scale);
    r.refactorized = std::max(r.refactorized, std::abs(sq + x.d1 - (up + C)) / scale);
  }
  r.holds = std::max({r.odd_part, r.even_part, r.factorized, r.refactorized}) <= tolerance;
  return r;
}

namespace {

double max_abs_on(const JetFn& f, const std::vector<double>& ys) {
  double m = 0.0;
  for (double y : ys) m = std::max(m, std::abs(f(y).value));
  return m;
}

NumericCheck finish(double worst, double scale, double tolerance) {
  NumericCheck c;
  c.worst = worst / std::max(scale, 1e-300);
  c.tolerance = tolerance;
  c.holds = c.worst <= tolerance;
  return c;
}

}  // namespace

NumericCheck darboux_flip(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                          double tolerance) {
  const JetFn psi = wavefunction_fn(a, n);
  const JetFn chi = well_superpotential(a);
  const double eig = l1_eigenvalue(a, n);
  double worst = 0.0;
  for (double y : ys) {
    const double flipped = apply_L1(a, psi, -y);  // (R L1 psi)(y)
    const Jet p = psi(y);
    const double a_dagger = -p.d1 + chi(y).value * p.value;
    const double expected = eig * psi(-y).value;
    worst = std::max({worst, std::abs(flipped - expected), std::abs(a_dagger - expected)});
  }
  return finish(worst, max_abs_on(psi, ys), tolerance);
}

NumericCheck conjugation_check(const SchrodingerParams& a, const Poly& p, const std::vector<double>& ys,
                               double tolerance) {
  const std::size_t deg = p.degree().value_or(0);
  const Poly s0p = make_S0(a.exact(), deg).apply(p);
  const Rational shift = pow(a.exact() + Rational(1), 2);
  const JetFn lhs_fn = phi_times_poly(a, to_doubles(p));
  const JetFn rhs_fn = phi_times_poly(a, to_doubles(p * shift - s0p));
  double worst = 0.0;
  double scale = 0.0;
  for (double y : ys) {
    const double rhs = rhs_fn(y).value;
    worst = std::max(worst, std::abs(apply_H1(a, lhs_fn, y) - rhs));
    scale = std::max(scale, std::abs(rhs));
  }
  return finish(worst, std::max(scale, max_abs_on(lhs_fn, ys)), tolerance);
}

NumericCheck L1_eigen_check(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                            double tolerance) {
  const JetFn psi = wavefunction_fn(a, n);
  const double eig = l1_eigenvalue(a, n);
  double worst = 0.0;
  for (double y : ys) worst = std::max(worst, std::abs(apply_L1(a, psi, y) - eig * psi(y).value));
  return finish(worst, max_abs_on(psi, ys), tolerance);
}

NumericCheck H1_eigen_check(const SchrodingerParams& a, std::size_t n, const std::vector<double>& ys,
                            double tolerance) {
  const JetFn psi = wavefunction_fn(a, n);
  const double e = energy(a, n);
  double worst = 0.0;
  for (double y : ys) worst = std::max(worst, std::abs(apply_H1(a, psi, y) - e * psi(y).value));
  return finish(worst, max_abs_on(psi, ys), tolerance);
}

NumericCheck square_root_check(const SchrodingerParams& a, const JetFn& f, const std::vector<double>& ys,
                               double tolerance) {
  const JetFn l1f = L1_fn(a, f);
  double worst = 0.0;
  double scale = 0.0;
  for (double y : ys) {
    const double h = apply_H1(a, f, y);
    worst = std::max(worst, std::abs(apply_L1(a, l1f, y) - h));
    scale = std::max(scale, std::abs(h));
  }
  return finish(worst, scale, tolerance);
}

CommutingPairReport commuting_pair_check(const Rational& a, std::size_t N) {
  const BandedOp L0 = make_L0(Rational(0), Rational(2) * a + Rational(1), N);
  const BandedOp S0 = make_S0(a, N);
  const BandedOp zero = Rational(0) * identity_op(N);
  const BandedOp relation = L0 * L0 - Rational(4) * (Rational(1) + a) * L0 + Rational(4) * S0;
  return {op_equal(commutator(L0, S0), zero), op_equal(relation, zero)};
}

std::size_t sign_changes(const std::vector<double>& values) {
  std::size_t changes = 0;
  int last = 0;
  for (double v : values) {
    const int s = (v > 0) - (v < 0);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

void write_sample_csv(std::ostream& os, const SchrodingerParams& a, std::size_t max_level, std::size_t points) {
  const std::vector<double> grid = make_grid(points);
  std::vector<JetFn> psis;
  os << "y,U";
  for (std::size_t n = 0; n <= max_level; ++n) {
    os << ",psi_" << n;
    psis.push_back(wavefunction_fn(a, n));
  }
  os << '\n';
  const auto old_precision = os.precision(17);
  for (double y : grid) {
    os << y << ',' << potential(a, y);
    for (const auto& psi : psis) os << ',' << psi(y).value;
    os << '\n';
  }
  os.precision(old_precision);
}

}  // namespace minusone::susy
