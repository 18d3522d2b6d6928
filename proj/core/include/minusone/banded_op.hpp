#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "minusone/poly.hpp"
#include "minusone/rational.hpp"

namespace minusone {

/// Linear operator on polynomials stored by its exact image of every monomial
/// x^n, n = 0..trunc_degree. Images never contain powers above
/// n + max_raise. Only images that can be computed without truncation are
/// stored, so every stored coefficient is exact.
class BandedOp {
 public:
  /// Output power k -> coefficient; zero coefficients are never stored.
  using Band = std::map<std::size_t, Rational>;

  BandedOp() = default;

  /// Builds the operator by evaluating `action(n)` for n = 0..trunc_degree.
  /// Throws DomainError if an image violates the declared band.
  static BandedOp from_action(std::size_t trunc_degree, int max_raise,
                              const std::function<Band(std::size_t)>& action);

  std::size_t trunc_degree() const { return images_.size() - 1; }
  int max_raise() const { return max_raise_; }
  const Band& image(std::size_t n) const;

  /// Exact action; throws TruncationError when deg(p) > trunc_degree.
  Poly apply(const Poly& p) const;

 private:
  BandedOp(int max_raise, std::vector<Band> images);

  int max_raise_ = 0;
  std::vector<Band> images_;

  friend BandedOp add(const BandedOp&, const BandedOp&);
  friend BandedOp scale(const Rational&, const BandedOp&);
  friend BandedOp compose(const BandedOp&, const BandedOp&);
};

inline Poly op_apply(const BandedOp& op, const Poly& p) { return op.apply(p); }

BandedOp add(const BandedOp& a, const BandedOp& b);
BandedOp scale(const Rational& c, const BandedOp& op);
/// outer ∘ inner. Defined for n <= min(N_inner, N_outer - raise_inner).
BandedOp compose(const BandedOp& outer, const BandedOp& inner);
BandedOp subtract(const BandedOp& a, const BandedOp& b);
/// AB - BA.
BandedOp commutator(const BandedOp& a, const BandedOp& b);
/// AB + BA.
BandedOp anticommutator(const BandedOp& a, const BandedOp& b);

inline BandedOp operator+(const BandedOp& a, const BandedOp& b) { return add(a, b); }
inline BandedOp operator-(const BandedOp& a, const BandedOp& b) { return subtract(a, b); }
inline BandedOp operator*(const Rational& c, const BandedOp& op) { return scale(c, op); }
inline BandedOp operator*(const BandedOp& a, const BandedOp& b) { return compose(a, b); }

struct OpIdentityReport {
  bool holds = false;
  BandedOp residual;
  std::size_t safe_degree = 0;
  /// Lowest monomial x^n whose residual image is nonzero.
  std::optional<std::size_t> first_failing_monomial;
};

/// Exact comparison of lhs and rhs on x^0..x^safe_degree, where safe_degree
/// is the smaller of the two truncation degrees.
OpIdentityReport op_equal(const BandedOp& lhs, const BandedOp& rhs);

/// Returns s when op(x^n) = s x^n for every stored n, otherwise nothing.
std::optional<Rational> scalar_multiple_of_identity(const BandedOp& op);

bool is_zero_op(const BandedOp& op);

// Concrete operators, all truncated at degree N.

BandedOp identity_op(std::size_t N);
/// f(x) -> f(-x).
BandedOp reflection_op(std::size_t N);
BandedOp derivative_op(std::size_t N);
/// f(x) -> x f(x).
BandedOp mult_x_op(std::size_t N);

/// Dunkl operator f' + mu (f(x) - f(-x))/x; x^n -> [n]_mu x^{n-1}.
BandedOp make_dunkl(const Rational& mu, std::size_t N);
/// [n]_mu = n + (1 - (-1)^n) mu.
Rational dunkl_bracket(std::size_t n, const Rational& mu);

/// 2(1-x) d/dx R + (alpha + beta + 1 - alpha/x)(1 - R), stored through its
/// two-term monomial action.
BandedOp make_L0(const Rational& alpha, const Rational& beta, std::size_t N);
/// Diagonal coefficient xi_n of L0 x^n.
Rational L0_diagonal(std::size_t n, const Rational& alpha, const Rational& beta);
/// Subdiagonal coefficient eta_n of L0 x^n.
Rational L0_subdiagonal(std::size_t n, const Rational& alpha);

/// Raising operator (x^2-1) f' + alpha (x-1)^2/(2x) f(-x)
///   + ((beta + alpha/2) x - 1 - alpha/(2x)) f.
BandedOp make_theta(const Rational& alpha, const Rational& beta, std::size_t N);

/// (1 - x^2) f'' + (1 - (2a+3) x) f'.
BandedOp make_S0(const Rational& a, std::size_t N);

/// Diagonal intertwiner x^n -> sigma_n x^n. Requires mu > -1/2.
BandedOp make_intertwiner(const Rational& mu, std::size_t N);
/// sigma_{2m-1} = sigma_{2m} = (1/2)_m / (mu + 1/2)_m, sigma_0 = 1.
Rational intertwiner_sigma(std::size_t n, const Rational& mu);

/// {"n": [[k, "num/den"], ...]} with k ascending.
nlohmann::json to_json(const BandedOp& op);

}  // namespace minusone
