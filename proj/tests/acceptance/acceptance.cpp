// One line per acceptance criterion; exit status is nonzero if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "minusone/aw_algebra.hpp"
#include "minusone/banded_op.hpp"
#include "minusone/eigensolver.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/susy.hpp"
#include "minusone/transforms.hpp"

using namespace minusone;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double time_limit;  // seconds, 0 = none
  std::function<Outcome()> run;
};

Rational R(const char* s) { return Rational::parse(s); }

std::vector<ParamPair> base_params() { return {{R("1/2"), R("3/2")}, {R("0"), R("2")}, {R("1"), R("1")}}; }

std::string label(const ParamPair& p) { return "(" + p.alpha().str() + "," + p.beta().str() + ")"; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Outcome exact_orthogonality() {
  Outcome o;
  for (const auto& p : base_params()) {
    const auto family = generate_family(p, 20);
    const MomentFunctional m = moments(p, 40);
    Rational norm(1);
    for (std::size_t n = 0; n <= 20; ++n) {
      if (n >= 1) norm *= *recurrence_coeffs(p, n).u;
      for (std::size_t k = 0; k < n; ++k) {
        if (!inner_product(m, family[n], family[k]).is_zero()) {
          o.fail(label(p) + " <P" + std::to_string(n) + ",P" + std::to_string(k) + "> != 0");
        }
      }
      if (inner_product(m, family[n], family[n]) != norm) o.fail(label(p) + " norm mismatch at n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "3 parameter pairs, n <= 20";
  return o;
}

Outcome eigen_identity() {
  Outcome o;
  for (const auto& p : base_params()) {
    const BandedOp L0 = make_L0(p.alpha(), p.beta(), 20);
    const auto family = generate_family(p, 20);
    for (std::size_t n = 0; n <= 20; ++n) {
      if (L0.apply(family[n]) != family[n] * eigenvalue(p, n)) o.fail(label(p) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "coefficient-exact, n <= 20";
  return o;
}

Outcome explicit_formula() {
  Outcome o;
  for (const auto& p : base_params()) {
    for (std::size_t n = 0; n <= 12; ++n) {
      if (explicit_poly(p, n) != generate_monic(p, n)) o.fail(label(p) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n <= 12";
  return o;
}

Outcome dunkl_lowering() {
  Outcome o;
  for (const auto& p : base_params()) {
    for (std::size_t n = 1; n <= 12; ++n) {
      if (!dunkl_classical_check(p, n).holds) o.fail(label(p) + " n=" + std::to_string(n));
    }
  }
  for (const Rational& a : {R("1/2"), R("3/2")}) {
    for (std::size_t n = 1; n <= 12; ++n) {
      if (!hahn_check(a, n).holds) o.fail("alpha=0 derivative form, a=" + a.str() + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n <= 12; alpha = 0 derivative form for a in {1/2, 3/2}";
  return o;
}

Outcome raising() {
  Outcome o;
  const ParamPair p(R("1/2"), R("5/2"));
  for (std::size_t n = 0; n <= 10; ++n) {
    if (!raising_check(p, n).holds) o.fail("n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "(1/2,5/2), n <= 10";
  return o;
}

Outcome geronimus_identification() {
  Outcome o;
  std::string first_literal_failure;
  bool shifted_ok = true;
  for (const auto& p : base_params()) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const Poly literal = geronimus_combination(p, gegenbauer_params_for(p), n);
      if (literal != generate_monic(p, n) && first_literal_failure.empty()) {
        first_literal_failure = label(p) + " n=" + std::to_string(n);
      }
      if (!christoffel_geronimus_check(p, n).holds) o.fail("Christoffel/Geronimus disagree " + label(p));
      shifted_ok = shifted_ok && identify_little(p, n).holds;
    }
  }
  if (!first_literal_failure.empty()) {
    o.fail("base (xi,eta) fails first at " + first_literal_failure + "; base (xi,eta+1) " +
           (shifted_ok ? "holds" : "fails") + " for n <= 12; Christoffel = Geronimus holds");
  }
  if (o.pass) o.detail = "n <= 12";
  return o;
}

Outcome intertwiner() {
  Outcome o;
  for (const ParamPair& p : {ParamPair(R("1"), R("1")), ParamPair(R("1/2"), R("3/2"))}) {
    for (std::size_t n = 0; n <= 10; ++n) {
      if (!proposition2_check(p, n).holds) o.fail(label(p) + " n=" + std::to_string(n));
    }
  }
  if (o.pass) o.detail = "n <= 10";
  return o;
}

Outcome anticommutator_algebra() {
  Outcome o;
  std::ostringstream signs;
  for (const auto& p : base_params()) {
    const aw::AWStructure s = aw::verify_relations(p, 24);
    if (!s.omega1 || !s.omega1->is_zero()) o.fail(label(p) + " YZ+ZY != 0");
    if (!s.omega2 || *s.omega2 != p.beta()) o.fail(label(p) + " ZX+XZ-Y != beta I");
    if (!s.omega3 || abs(*s.omega3) != p.alpha()) o.fail(label(p) + " |s| != alpha");
    if (!s.casimir_is_identity) o.fail(label(p) + " Y^2+Z^2 != I");
    if (s.omega3) signs << " " << label(p) << " s=" << s.omega3->str();
  }
  if (o.pass) o.detail = "N=24;" + signs.str();
  return o;
}

Outcome commuting_pair() {
  Outcome o;
  for (const Rational& a : {R("3/2"), R("5/2")}) {
    const auto r = susy::commuting_pair_check(a, 24);
    if (!r.commute.holds) o.fail("a=" + a.str() + " commutator nonzero");
    if (!r.relation.holds) o.fail("a=" + a.str() + " quadratic relation fails");
  }
  if (o.pass) o.detail = "a in {3/2, 5/2}, N=24";
  return o;
}

Outcome qlimit() {
  Outcome o;
  const ParamPair p(R("1/2"), R("3/2"));
  double lo = 1e300;
  double hi = 0.0;
  auto judge = [&](const std::string& what, double coarse, double fine) {
    const double ratio = coarse / fine;
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
    if (!(ratio >= 8.0 && ratio <= 12.0)) o.fail(what + " ratio " + sci(ratio));
  };
  for (std::size_t n = 0; n <= 10; ++n) {
    const QLimitError e3 = qlimit_error(p, 1e-3, n);
    const QLimitError e4 = qlimit_error(p, 1e-4, n);
    judge("b_" + std::to_string(n), e3.b, e4.b);
    if (n >= 1) judge("u_" + std::to_string(n), *e3.u, *e4.u);
  }
  if (o.pass) o.detail = "ratios in [" + sci(lo) + ", " + sci(hi) + "]";
  return o;
}

Outcome weight_moments() {
  Outcome o;
  const ParamPair p(R("1/2"), R("3/2"));
  const MomentFunctional m = moments(p, 8);
  double worst = 0.0;
  for (std::size_t k = 0; k <= 8; ++k) {
    const double err = std::abs(weight_moment_quadrature(p, k) - m[k].to_double());
    worst = std::max(worst, err);
    if (!(err < 1e-8)) o.fail("k=" + std::to_string(k) + " error " + sci(err));
  }
  if (o.pass) o.detail = "max error " + sci(worst);
  return o;
}

Outcome general_solution() {
  Outcome o;
  double worst_ode = 0.0;
  double worst_parity = 0.0;
  const double xs[] = {-0.8, -0.5, -0.2, 0.2, 0.5, 0.8};
  for (const ParamPair& p : {ParamPair(R("0"), R("0")), ParamPair(R("1/2"), R("3/2"))}) {
    const double elementary = 2 * (p.beta().to_double() + 1);
    for (double lambda : {1.3, -4.0, elementary}) {
      const auto s = eigen::build_solution(p, lambda);
      for (double x : xs) {
        const double r = eigen::ode_residual(p, lambda, x);
        const double g = std::abs(eigen::evaluate(s, x).g + eigen::evaluate(s, -x).g);
        worst_ode = std::max(worst_ode, r);
        worst_parity = std::max(worst_parity, g);
        if (!(r < 1e-10)) o.fail(label(p) + " ODE residual " + sci(r));
        if (!(g < 1e-12)) o.fail(label(p) + " g parity " + sci(g));
      }
    }
    for (double x : xs) {
      const double r = eigen::elementary_residual(p, x);
      worst_ode = std::max(worst_ode, r);
      if (!(r < 1e-10)) o.fail(label(p) + " closed-form residual " + sci(r));
    }
  }
  if (o.pass) o.detail = "max residual " + sci(worst_ode) + ", max |g(x)+g(-x)| " + sci(worst_parity);
  return o;
}

Outcome susy_suite() {
  Outcome o;
  const susy::SchrodingerParams a(R("3/2"));
  const std::vector<double> grid = susy::make_grid(200);
  double worst = 0.0;
  auto track = [&](const std::string& what, const susy::NumericCheck& c) {
    worst = std::max(worst, c.worst);
    if (!c.holds || c.tolerance > 1e-8) o.fail(what + " residual " + sci(c.worst));
  };
  for (std::size_t n = 0; n <= 5; ++n) {
    track("L1 psi_" + std::to_string(n), susy::L1_eigen_check(a, n, grid));
    track("H1 psi_" + std::to_string(n), susy::H1_eigen_check(a, n, grid));
  }
  for (std::size_t k = 0; k <= 6; ++k) {
    std::vector<double> coeffs(k + 1, 0.0);
    coeffs[k] = 1.0;
    track("L1^2 on Phi s^" + std::to_string(k), susy::square_root_check(a, susy::phi_times_poly(a, coeffs), grid));
  }
  const auto f = susy::factorization_check(
      susy::well_superpotential(a), [&](double y) { return susy::potential(a, y); }, 0.0, grid, 1e-10);
  const double fworst = std::max({f.odd_part, f.even_part, f.factorized, f.refactorized});
  if (!f.holds) o.fail("factorization residual " + sci(fworst));
  if (o.pass) o.detail = "max eigen/square residual " + sci(worst) + ", factorization " + sci(fworst);
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact orthogonality and norms", 5.0, exact_orthogonality},
      {2, "exact L0 eigen-identity", 2.0, eigen_identity},
      {3, "explicit hypergeometric form = recurrence", 0.0, explicit_formula},
      {4, "Dunkl lowering to (alpha, beta+2)", 0.0, dunkl_lowering},
      {5, "Theta raising to (alpha, beta-2)", 0.0, raising},
      {6, "Geronimus identification, base (xi, eta)", 0.0, geronimus_identification},
      {7, "intertwiner maps Jacobi to little -1 Jacobi", 0.0, intertwiner},
      {8, "anticommutator algebra and Casimir", 0.0, anticommutator_algebra},
      {9, "L0 and S0 commute with quadratic relation", 0.0, commuting_pair},
      {10, "q -> -1 limit is linear in eps", 0.0, qlimit},
      {11, "weight quadrature matches exact moments", 5.0, weight_moments},
      {12, "general eigenfunction residuals and parity", 0.0, general_solution},
      {13, "Schroedinger well eigen, square root, factorization", 3.0, susy_suite},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0 && seconds >= c.time_limit) o.fail("runtime " + sci(seconds) + " s over limit");
    if (!o.pass) ++failures;
    std::printf("%s [%2d] %-52s %7.3fs  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds,
                o.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
