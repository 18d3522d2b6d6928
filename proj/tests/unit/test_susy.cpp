#include <cmath>
#include <numbers>
#include <sstream>

#include <gtest/gtest.h>

#include "minusone/errors.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/susy.hpp"
#include "test_support.hpp"

using namespace minusone;
using minusone::testing::R;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> interior_samples(std::size_t count) {
  std::vector<double> ys;
  for (std::size_t i = 0; i < count; ++i) ys.push_back(-1.4 + 2.8 * (static_cast<double>(i) + 0.5) / count);
  return ys;
}

susy::SchrodingerParams well(const char* a) { return susy::SchrodingerParams(R(a)); }

void expect_derivatives_match(const susy::JetFn& f, double y, bool second = true) {
  const double h = 1e-3;
  const susy::Jet j = f(y);
  const double d1 = (f(y + h).value - f(y - h).value) / (2 * h);
  EXPECT_NEAR(j.d1, d1, 1e-5 * std::max(1.0, std::abs(d1))) << y;
  if (second) {
    const double d2 = (f(y + h).value - 2 * j.value + f(y - h).value) / (h * h);
    EXPECT_NEAR(j.d2, d2, 1e-4 * std::max(1.0, std::abs(d2))) << y;
  }
}

}  // namespace

TEST(Well, Domain) {
  EXPECT_THROW(well("1/2"), DomainError);
  EXPECT_THROW(well("0"), DomainError);
  EXPECT_NO_THROW(well("51/100"));
}

TEST(Potential, Examples) {
  for (const char* a : {"3/2", "5/2", "7/10"}) {
    const auto p = well(a);
    EXPECT_DOUBLE_EQ(susy::potential(p, 0.0), (p.a() + 0.5) * (p.a() + 0.5));
  }
  EXPECT_NEAR(susy::potential(well("3/2"), kPi / 6), 4.0, 1e-12);
  EXPECT_GT(susy::potential(well("3/2"), kPi / 2 - 1e-6), 1e10);
  EXPECT_GT(susy::potential(well("3/2"), -kPi / 2 + 1e-6), 1e10);
}

TEST(Energy, Examples) {
  EXPECT_DOUBLE_EQ(susy::energy(well("3/2"), 2), 81.0 / 4);
  EXPECT_DOUBLE_EQ(susy::energy(well("3/2"), 0), 25.0 / 4);
  const auto p = well("7/10");
  for (std::size_t n = 0; n < 10; ++n) {
    EXPECT_NEAR(susy::energy(p, n + 1) - susy::energy(p, n), 2 * (p.a() + n + 1) + 1, 1e-12);
  }
}

TEST(Wavefunction, Examples) {
  for (const char* a : {"3/2", "5/2"}) EXPECT_DOUBLE_EQ(susy::wavefunction(well(a), 0, 0.0), 1.0);
  EXPECT_NEAR(susy::wavefunction(well("3/2"), 1, 0.0), -0.2, 1e-14);
  for (std::size_t n = 0; n <= 5; ++n) {
    EXPECT_NEAR(susy::wavefunction(well("3/2"), n, kPi / 2 - 1e-9), 0.0, 1e-8);
    EXPECT_NEAR(susy::wavefunction(well("3/2"), n, -kPi / 2 + 1e-9), 0.0, 1e-8);
  }
}

TEST(Wavefunction, PolynomialFactorIsJacobi) {
  for (const char* a : {"3/2", "5/2", "2/3"}) {
    const auto p = well(a);
    const ParamPair jacobi(Rational(0), Rational(2) * p.exact() + Rational(1));
    for (std::size_t n = 0; n <= 8; ++n) {
      EXPECT_EQ(susy::wavefunction_poly(p, n).monic(), generate_monic(jacobi, n)) << n;
    }
  }
}

TEST(Wavefunction, AnalyticDerivatives) {
  const auto p = well("3/2");
  for (double y : {-1.2, -0.4, 0.1, 0.9, 1.3}) {
    expect_derivatives_match([&](double t) { return susy::ground_state(p, t); }, y);
    for (std::size_t n : {1u, 3u, 5u}) expect_derivatives_match(susy::wavefunction_fn(p, n), y);
    expect_derivatives_match(susy::phi_times_poly(p, {0.5, -1.0, 2.0}), y);
    expect_derivatives_match(susy::L1_fn(p, susy::wavefunction_fn(p, 2)), y, false);
  }
}

TEST(Wavefunction, PhiTimesPolyMatchesProduct) {
  const auto p = well("5/2");
  const auto f = susy::phi_times_poly(p, {1.0, 0.0, -3.0});
  for (double y : interior_samples(9)) {
    const double s = std::sin(y);
    EXPECT_NEAR(f(y).value, susy::ground_state(p, y).value * (1 - 3 * s * s), 1e-13);
  }
}

TEST(L1, ActionOnEvenFunction) {
  // For even f, L1 f = f' - (a + 1/2) f / cos y.
  const auto p = well("3/2");
  const susy::JetFn f = [](double y) { return susy::Jet{std::cos(y), -std::sin(y), -std::cos(y)}; };
  for (double y : interior_samples(7)) {
    EXPECT_NEAR(susy::apply_L1(p, f, y), -std::sin(y) - 2.0, 1e-13);
  }
}

TEST(L1, GroundStateEigenvalue) {
  for (const char* a : {"3/2", "5/2"}) {
    const auto p = well(a);
    EXPECT_NEAR(susy::apply_L1(p, susy::wavefunction_fn(p, 0), 0.0), -(p.a() + 1), 1e-13);
    const susy::JetFn psi0 = [&](double y) { return susy::ground_state(p, y); };
    for (double y : interior_samples(11)) {
      EXPECT_NEAR(susy::apply_H1(p, psi0, y), (p.a() + 1) * (p.a() + 1) * psi0(y).value, 1e-10);
    }
  }
}

TEST(L1, EigenfunctionsAcrossLevels) {
  const std::vector<double> grid = susy::make_grid(200);
  for (const char* a : {"3/2", "5/2"}) {
    const auto p = well(a);
    for (std::size_t n = 0; n <= 5; ++n) {
      const auto l1 = susy::L1_eigen_check(p, n, grid);
      const auto h1 = susy::H1_eigen_check(p, n, grid);
      EXPECT_TRUE(l1.holds) << n << " " << l1.worst;
      EXPECT_TRUE(h1.holds) << n << " " << h1.worst;
      EXPECT_EQ(l1.tolerance, 1e-8);
    }
  }
}

TEST(L1, EigenvalueSignAlternates) {
  const auto p = well("3/2");
  const double y = 0.3;
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto psi = susy::wavefunction_fn(p, n);
    const double ratio = susy::apply_L1(p, psi, y) / psi(y).value;
    EXPECT_NEAR(ratio, (n % 2 ? 1.0 : -1.0) * (p.a() + n + 1), 1e-9) << n;
  }
}

TEST(Darboux, FlipExamples) {
  const auto p = well("3/2");
  // R L1 psi_1 at y = 0.4 equals (a + 2) psi_1(-0.4).
  const auto psi1 = susy::wavefunction_fn(p, 1);
  EXPECT_NEAR(susy::apply_L1(p, psi1, -0.4), (p.a() + 2) * psi1(-0.4).value, 1e-12);
  const std::vector<double> grid = susy::make_grid(200);
  for (std::size_t n = 0; n <= 5; ++n) EXPECT_TRUE(susy::darboux_flip(p, n, grid).holds) << n;
}

TEST(Darboux, ModulusIsSquareRootOfEnergy) {
  const auto p = well("5/2");
  for (std::size_t n = 0; n <= 5; ++n) {
    const auto psi = susy::wavefunction_fn(p, n);
    const double y = 0.2;
    EXPECT_NEAR(std::abs(susy::apply_L1(p, psi, y) / psi(y).value), std::sqrt(susy::energy(p, n)), 1e-9);
  }
}

TEST(Factorization, WellSuperpotential) {
  const std::vector<double> ys = interior_samples(41);
  for (const char* a : {"3/2", "5/2"}) {
    const auto p = well(a);
    const auto r = susy::factorization_check(
        susy::well_superpotential(p), [&](double y) { return susy::potential(p, y); }, 0.0, ys);
    EXPECT_TRUE(r.holds) << r.odd_part << " " << r.even_part << " " << r.factorized << " " << r.refactorized;
  }
}

TEST(Factorization, FreeParticleAndOddPerturbation) {
  const std::vector<double> ys = interior_samples(21);
  const susy::JetFn zero = [](double) { return susy::Jet{}; };
  const auto zero_u = [](double) { return 0.0; };
  EXPECT_TRUE(susy::factorization_check(zero, zero_u, 0.0, ys).holds);

  const auto p = well("3/2");
  const auto chi = susy::well_superpotential(p);
  const susy::JetFn perturbed = [&](double y) {
    susy::Jet j = chi(y);
    j.value += 1e-3 * y;
    j.d1 += 1e-3;
    return j;
  };
  const auto r = susy::factorization_check(perturbed, [&](double y) { return susy::potential(p, y); }, 0.0, ys);
  EXPECT_FALSE(r.holds);
  EXPECT_GT(r.odd_part, r.tolerance);
}

TEST(Conjugation, GroundStateIntertwinesOperators) {
  const std::vector<double> ys = interior_samples(20);
  const Poly half_shifted{R("-1/2"), Rational(0), Rational(1)};
  for (const char* a : {"3/2", "5/2"}) {
    const auto p = well(a);
    for (const Poly& q : {Poly{Rational(1)}, Poly::x(), half_shifted}) {
      const auto r = susy::conjugation_check(p, q, ys);
      EXPECT_TRUE(r.holds) << r.worst;
    }
  }
}

TEST(SquareRoot, L1SquaredIsH1) {
  const std::vector<double> ys = interior_samples(50);
  const auto p = well("3/2");
  for (std::size_t k = 0; k <= 6; ++k) {
    std::vector<double> coeffs(k + 1, 0.0);
    coeffs[k] = 1.0;
    const auto r = susy::square_root_check(p, susy::phi_times_poly(p, coeffs), ys);
    EXPECT_TRUE(r.holds) << k << " " << r.worst;
  }
}

TEST(Nodes, LevelNHasNNodes) {
  const std::vector<double> grid = susy::make_grid(2000);
  const auto p = well("3/2");
  for (std::size_t n = 0; n <= 6; ++n) {
    EXPECT_EQ(susy::sign_changes(susy::sample_wavefunction(p, n, grid).values), n);
  }
  EXPECT_EQ(susy::sign_changes({1.0, 0.0, -1.0, -2.0, 0.0, 3.0}), 2u);
}

TEST(Grid, EndpointsAndOrdering) {
  const auto g = susy::make_grid(50, 1e-2);
  ASSERT_EQ(g.size(), 50u);
  EXPECT_DOUBLE_EQ(g.front(), -kPi / 2 + 1e-2);
  EXPECT_DOUBLE_EQ(g.back(), kPi / 2 - 1e-2);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_LT(g[i - 1], g[i]);
  EXPECT_THROW(susy::make_grid(1), DomainError);
}

TEST(CommutingPair, ExactRelations) {
  for (const char* a : {"3/2", "5/2"}) {
    const auto r = susy::commuting_pair_check(R(a), 24);
    EXPECT_TRUE(r.commute.holds);
    EXPECT_TRUE(r.relation.holds);
    EXPECT_TRUE(r.holds());
  }
}

TEST(SampleCsv, Header) {
  std::ostringstream os;
  susy::write_sample_csv(os, well("3/2"), 3, 10);
  std::istringstream in(os.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "y,U,psi_0,psi_1,psi_2,psi_3");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10u);
}
