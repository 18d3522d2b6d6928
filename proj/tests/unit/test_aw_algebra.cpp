#include <gtest/gtest.h>

#include "minusone/aw_algebra.hpp"
#include "minusone/errors.hpp"
#include "test_support.hpp"

using namespace minusone;
using minusone::testing::R;

namespace {

// L0 f from its definition, with (f - Rf)/x divided out exactly.
Poly L0_direct(const ParamPair& p, const Poly& f) {
  const Poly odd_twice = f - reflect(f);
  const QuotientRemainder qr = divide(odd_twice, Poly::x());
  EXPECT_TRUE(qr.remainder.is_zero());
  const Poly one_minus_x{Rational(1), Rational(-1)};
  return one_minus_x * reflect(f).derivative() * Rational(2) +
         odd_twice * (p.alpha() + p.beta() + Rational(1)) - qr.quotient * p.alpha();
}

}  // namespace

TEST(Generators, ActionOnLowMonomials) {
  const ParamPair p(R("1/2"), R("3/2"));
  const auto g = aw::build_xyz(p, 6);
  EXPECT_EQ(g.X.apply(Poly{Rational(1)}), Poly{R("-3/2")});
  EXPECT_EQ(g.Y.apply(Poly{Rational(1)}), Poly::x());
  EXPECT_EQ(g.Z.apply(Poly{Rational(1)}), (Poly{Rational(-1), Rational(1)}));
  EXPECT_EQ(g.Z.apply(Poly::x()), (Poly{Rational(0), Rational(1), Rational(-1)}));
}

TEST(Generators, MatchDirectDefinitionOnRandomPolys) {
  auto rng = minusone::testing::make_rng();
  const ParamPair p(R("2/3"), R("5/4"));
  const std::size_t N = 20;
  const auto g = aw::build_xyz(p, N);
  const Rational shift = (Rational(1) + p.alpha() + p.beta()) / Rational(2);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = minusone::testing::random_poly(rng, N - 1);
    EXPECT_EQ(g.X.apply(f), L0_direct(p, f) * R("1/2") - f * shift);
    EXPECT_EQ(g.Z.apply(f), (Poly{Rational(-1), Rational(1)} * reflect(f)));
    EXPECT_EQ(g.Z.apply(g.Z.apply(f)), (Poly{Rational(1), Rational(0), Rational(-1)} * f));
  }
}

TEST(Relations, ExampleConstants) {
  const ParamPair p(Rational(1), Rational(2));
  const aw::AWStructure s = aw::verify_relations(p, 24);
  EXPECT_EQ(s.omega1, Rational(0));
  EXPECT_EQ(s.omega2, Rational(2));
  EXPECT_EQ(s.omega3, Rational(-1));
  EXPECT_TRUE(s.casimir_is_identity);
  EXPECT_TRUE(s.holds(p));
}

TEST(Relations, HoldAcrossParameterSet) {
  for (const ParamPair& p : {ParamPair(R("1/2"), R("3/2")), ParamPair(Rational(0), Rational(0)),
                             ParamPair(R("-1/2"), R("7/3")), ParamPair(Rational(3), R("1/5"))}) {
    const aw::AWStructure s = aw::verify_relations(p, 24);
    EXPECT_TRUE(s.holds(p)) << p.to_json().dump();
    EXPECT_EQ(s.omega3, -p.alpha());
    EXPECT_GE(s.safe_degree, 20u);
  }
}

TEST(Relations, ShortTruncationRejected) {
  EXPECT_THROW(aw::verify_relations({Rational(1), Rational(1)}, 3), DomainError);
  EXPECT_THROW(aw::verify_casimir({Rational(1), Rational(1)}, 2), DomainError);
}

TEST(Casimir, IsIdentity) {
  for (const ParamPair& p : {ParamPair(Rational(1), Rational(2)), ParamPair(R("1/3"), R("-1/3"))}) {
    EXPECT_TRUE(aw::verify_casimir(p, 16));
  }
}

TEST(XDiagonal, ActsByShiftedEigenvalue) {
  for (const ParamPair& p : {ParamPair(Rational(1), Rational(2)), ParamPair(R("1/2"), R("3/2"))}) {
    for (std::size_t n = 0; n <= 12; ++n) EXPECT_TRUE(aw::x_diagonal_check(p, n).holds) << n;
  }
}

TEST(AWJson, Fields) {
  const nlohmann::json j = aw::to_json(aw::verify_relations({Rational(1), Rational(2)}, 8));
  EXPECT_EQ(j["omega1"], "0");
  EXPECT_EQ(j["omega2"], "2");
  EXPECT_EQ(j["omega3"], "-1");
  EXPECT_EQ(j["omega3_sign"], -1);
  EXPECT_EQ(j["casimir_is_identity"], true);
}
