#include "minusone/aw_algebra.hpp"

#include <algorithm>

#include "minusone/errors.hpp"

namespace minusone::aw {
namespace {

nlohmann::json optional_rational(const std::optional<Rational>& r) {
  return r ? nlohmann::json(r->str()) : nlohmann::json(nullptr);
}

}  // namespace

Generators build_xyz(const ParamPair& p, std::size_t N) {
  const Rational shift = (Rational(1) + p.alpha() + p.beta()) / Rational(2);
  BandedOp X = Rational(1, 2) * make_L0(p.alpha(), p.beta(), N) - shift * identity_op(N);
  BandedOp Y = mult_x_op(N);
  // (x - 1) R keeps the truncation at N: R does not raise.
  BandedOp Z = compose(mult_x_op(N) - identity_op(N), reflection_op(N));
  return {std::move(X), std::move(Y), std::move(Z)};
}

AWStructure verify_relations(const ParamPair& p, std::size_t N) {
  if (N < 4) throw DomainError("AW relations need truncation N >= 4");
  const auto [X, Y, Z] = build_xyz(p, N);
  AWStructure s;
  s.residual_xy = anticommutator(X, Y) - Z;
  s.residual_yz = anticommutator(Y, Z);
  s.residual_zx = anticommutator(Z, X) - Y;
  s.safe_degree = std::min({s.residual_xy.trunc_degree(), s.residual_yz.trunc_degree(),
                            s.residual_zx.trunc_degree()});
  s.omega3 = scalar_multiple_of_identity(s.residual_xy);
  s.omega1 = scalar_multiple_of_identity(s.residual_yz);
  s.omega2 = scalar_multiple_of_identity(s.residual_zx);
  if (!s.omega1 || !s.omega2 || !s.omega3) {
    throw DomainError("AW relation residual is not a multiple of the identity");
  }
  s.casimir_is_identity = verify_casimir(p, N);
  return s;
}

bool AWStructure::holds(const ParamPair& p) const {
  return omega1 && omega1->is_zero() && omega2 && *omega2 == p.beta() && omega3 &&
         abs(*omega3) == abs(p.alpha()) && casimir_is_identity;
}

bool verify_casimir(const ParamPair& p, std::size_t N) {
  if (N < 4) throw DomainError("Casimir check needs truncation N >= 4");
  const auto [X, Y, Z] = build_xyz(p, N);
  const BandedOp Q = compose(Y, Y) + compose(Z, Z);
  if (!op_equal(Q, identity_op(N)).holds) return false;
  return is_zero_op(commutator(Q, X)) && is_zero_op(commutator(Q, Y)) && is_zero_op(commutator(Q, Z));
}

CheckReport x_diagonal_check(const ParamPair& p, std::size_t n) {
  const auto gens = build_xyz(p, n);
  const Poly P = generate_monic(p, n);
  const Rational value = (eigenvalue(p, n) - (Rational(1) + p.alpha() + p.beta())) / Rational(2);
  return compare_polys("aw_x_diagonal", p.to_json(), n, gens.X.apply(P), P * value);
}

nlohmann::json to_json(const AWStructure& s) {
  return {{"omega1", optional_rational(s.omega1)},
          {"omega2", optional_rational(s.omega2)},
          {"omega3", optional_rational(s.omega3)},
          {"omega3_sign", s.omega3 ? s.omega3->sign() : 0},
          {"casimir_is_identity", s.casimir_is_identity},
          {"safe_degree", s.safe_degree}};
}

}  // namespace minusone::aw
