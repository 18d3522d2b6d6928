#include "minusone/transforms.hpp"

#include <string>

#include "minusone/banded_op.hpp"
#include "minusone/errors.hpp"

namespace minusone {
namespace {

Rational from_size(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

const Rational kHalf(1, 2);

}  // namespace

JacobiParams::JacobiParams(Rational xi, Rational eta) : xi_(std::move(xi)), eta_(std::move(eta)) {
  if (xi_ <= Rational(-1)) throw DomainError("xi must be > -1, got " + xi_.str());
  if (eta_ <= Rational(-1)) throw DomainError("eta must be > -1, got " + eta_.str());
}

nlohmann::json JacobiParams::to_json() const { return {{"xi", xi_.str()}, {"eta", eta_.str()}}; }

Poly monic_jacobi_01(const JacobiParams& jp, std::size_t n) {
  const Rational nn = from_size(n);
  return terminating_2f1(-nn, nn + jp.xi() + jp.eta() + Rational(1), jp.xi() + Rational(1), 1).monic();
}

Poly monic_jacobi_sym(const JacobiParams& jp, std::size_t n) {
  const Rational nn = from_size(n);
  const Rational top = nn + jp.xi() + jp.eta() + Rational(1);
  const Poly series = terminating_2f1(-nn, top, jp.xi() + Rational(1), 1);
  const Rational norm = pow(Rational(2), static_cast<unsigned>(n)) * pochhammer(jp.xi() + Rational(1), n) /
                        pochhammer(top, n);
  return series.compose_affine(kHalf, -kHalf) * norm;
}

Poly symmetric_gegenbauer(const JacobiParams& jp, std::size_t n) {
  if (n % 2 == 0) return monic_jacobi_01(jp, n / 2).compose_x2();
  return Poly::x() * monic_jacobi_01(JacobiParams(jp.xi() + Rational(1), jp.eta()), n / 2).compose_x2();
}

Poly christoffel_transform(const JacobiParams& jp, std::size_t n) {
  const Poly s_n = symmetric_gegenbauer(jp, n);
  const Poly s_next = symmetric_gegenbauer(jp, n + 1);
  const Rational at_n = s_n(Rational(-1));
  if (at_n.is_zero()) {
    throw DomainError("S_" + std::to_string(n) + "(-1) = 0: -1 is a zero, Christoffel kernel undefined");
  }
  const Rational A = s_next(Rational(-1)) / at_n;
  auto [quotient, remainder] = divide(s_next - s_n * A, Poly({Rational(1), Rational(1)}));
  if (!remainder.is_zero()) {
    throw ConsistencyError("Christoffel numerator is not divisible by x + 1 (remainder " +
                           remainder.to_string() + ")");
  }
  return quotient;
}

Rational geronimus_B(const ParamPair& p, std::size_t n) {
  if (n == 0) throw DomainError("B_n is defined for n >= 1");
  const Rational nn = from_size(n);
  const Rational num = n % 2 == 0 ? Rational(2) * nn : Rational(2) * nn + Rational(2) * p.alpha();
  return num / (Rational(2) * (p.alpha() + p.beta() + Rational(2) * nn));
}

JacobiParams gegenbauer_params_for(const ParamPair& p) {
  return JacobiParams((p.alpha() - Rational(1)) * kHalf, (p.beta() - Rational(1)) * kHalf);
}

Poly geronimus_combination(const ParamPair& p, const JacobiParams& base, std::size_t n) {
  Poly out = symmetric_gegenbauer(base, n);
  if (n >= 1) out -= symmetric_gegenbauer(base, n - 1) * geronimus_B(p, n);
  return out;
}

Poly geronimus_combination(const ParamPair& p, std::size_t n) {
  const JacobiParams base = gegenbauer_params_for(p);
  return geronimus_combination(p, JacobiParams(base.xi(), base.eta() + Rational(1)), n);
}

CheckReport identify_little(const ParamPair& p, std::size_t n) {
  return compare_polys("identify_little", p.to_json(), n, generate_monic(p, n), geronimus_combination(p, n));
}

CheckReport christoffel_geronimus_check(const ParamPair& p, std::size_t n) {
  return compare_polys("christoffel_geronimus", p.to_json(), n,
                       christoffel_transform(gegenbauer_params_for(p), n), geronimus_combination(p, n));
}

CheckReport dunkl_classical_check(const ParamPair& p, std::size_t n) {
  if (n == 0) throw DomainError("Dunkl-classical check needs n >= 1");
  const Rational mu = p.alpha() * kHalf;
  const Poly lhs = make_dunkl(mu, n).apply(generate_monic(p, n));
  const ParamPair shifted(p.alpha(), p.beta() + Rational(2));
  const Poly rhs = generate_monic(shifted, n - 1) * dunkl_bracket(n, mu);
  return compare_polys("dunkl_classical", p.to_json(), n, lhs, rhs);
}

CheckReport hahn_check(const Rational& a, std::size_t n) {
  if (n == 0) throw DomainError("Hahn check needs n >= 1");
  const Poly lhs = monic_jacobi_sym(JacobiParams(a, a + Rational(1)), n).derivative();
  const Poly rhs = monic_jacobi_sym(JacobiParams(a + Rational(1), a + Rational(2)), n - 1) * from_size(n);
  return compare_polys("hahn", nlohmann::json{{"a", a.str()}}, n, lhs, rhs);
}

Rational raising_nu(const ParamPair& p, std::size_t n) {
  const Rational base = from_size(n) + p.beta() - Rational(1);
  return n % 2 == 0 ? base : base + p.alpha();
}

CheckReport raising_check(const ParamPair& p, std::size_t n) {
  if (p.beta() <= Rational(1)) {
    throw DomainError("raising check needs beta > 1 so that beta - 2 > -1, got beta = " + p.beta().str());
  }
  const Poly lhs = make_theta(p.alpha(), p.beta(), n).apply(generate_monic(p, n));
  const ParamPair lowered(p.alpha(), p.beta() - Rational(2));
  const Poly rhs = generate_monic(lowered, n + 1) * raising_nu(p, n + 1);
  return compare_polys("raising", p.to_json(), n, lhs, rhs);
}

CheckReport proposition2_check(const ParamPair& p, std::size_t n) {
  const Rational mu = p.alpha() * kHalf;
  const Rational xi = (p.alpha() + p.beta() - Rational(1)) * kHalf;
  const Poly jacobi = monic_jacobi_sym(JacobiParams(xi, xi + Rational(1)), n);
  const Poly lhs = make_intertwiner(mu, n).apply(jacobi) * (Rational(1) / intertwiner_sigma(n, mu));
  return compare_polys("intertwiner", p.to_json(), n, lhs, generate_monic(p, n));
}

CheckReport gegenbauer_dunkl_check(const JacobiParams& jp, std::size_t n) {
  if (n == 0) throw DomainError("Gegenbauer Dunkl check needs n >= 1");
  const Rational mu = jp.xi() + kHalf;
  const Poly lhs = make_dunkl(mu, n).apply(symmetric_gegenbauer(jp, n));
  const Poly rhs =
      symmetric_gegenbauer(JacobiParams(jp.xi(), jp.eta() + Rational(1)), n - 1) * dunkl_bracket(n, mu);
  return compare_polys("gegenbauer_dunkl", jp.to_json(), n, lhs, rhs);
}

TildeRecurrence recurrence_from_family(const std::vector<Poly>& family) {
  TildeRecurrence out;
  if (family.size() < 2) return out;
  const std::size_t last = family.size() - 1;
  out.u.assign(last, Rational(0));
  for (std::size_t k = 0; k < last; ++k) {
    if (family[k].degree() != Degree(k) || family[k].leading() != Rational(1)) {
      throw ConsistencyError("family member " + std::to_string(k) + " is not monic of degree " +
                             std::to_string(k));
    }
    // x P_k - P_{k+1} has degree <= k.
    Poly rest = Poly::x() * family[k] - family[k + 1];
    const Rational b = rest.coeff(k);
    rest -= family[k] * b;
    Rational u(0);
    if (k >= 1) {
      u = rest.coeff(k - 1);
      rest -= family[k - 1] * u;
      out.u[k] = u;
    }
    if (!rest.is_zero()) {
      throw ConsistencyError("family does not satisfy a three-term recurrence at k = " + std::to_string(k));
    }
    out.b.push_back(b);
  }
  return out;
}

}  // namespace minusone
