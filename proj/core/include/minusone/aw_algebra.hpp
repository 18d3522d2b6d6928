#pragma once

#include <cstddef>
#include <optional>

#include <nlohmann/json.hpp>

#include "minusone/banded_op.hpp"
#include "minusone/little_jacobi.hpp"
#include "minusone/report.hpp"

namespace minusone::aw {

struct Generators {
  BandedOp X;  // L0/2 - (1 + alpha + beta)/2
  BandedOp Y;  // multiplication by x
  BandedOp Z;  // (x - 1) R
};

Generators build_xyz(const ParamPair& p, std::size_t N);

/// Anticommutator relations at q = -1, with constants read off the residuals:
///   XY + YX - Z = omega3 I,  YZ + ZY = omega1 I (expected 0),
///   ZX + XZ - Y = omega2 I (expected beta).
struct AWStructure {
  std::optional<Rational> omega1;
  std::optional<Rational> omega2;
  std::optional<Rational> omega3;
  bool casimir_is_identity = false;
  BandedOp residual_xy;  // XY + YX - Z
  BandedOp residual_yz;  // YZ + ZY
  BandedOp residual_zx;  // ZX + XZ - Y
  std::size_t safe_degree = 0;

  /// omega1 = 0, omega2 = beta, omega3 = +-alpha, Casimir = I.
  bool holds(const ParamPair& p) const;
};

/// Throws DomainError when a residual is not a scalar multiple of the
/// identity (the algebra does not close linearly). Requires N >= 4.
AWStructure verify_relations(const ParamPair& p, std::size_t N);

/// Y^2 + Z^2 == I and Q commutes with X, Y, Z exactly.
bool verify_casimir(const ParamPair& p, std::size_t N);

/// X P_n against (lambda_n - (1 + alpha + beta))/2 P_n.
CheckReport x_diagonal_check(const ParamPair& p, std::size_t n);

nlohmann::json to_json(const AWStructure& s);

}  // namespace minusone::aw
