#include "minusone/banded_op.hpp"

#include <algorithm>
#include <string>

#include "minusone/errors.hpp"

namespace minusone {
namespace {

using Band = BandedOp::Band;

Rational from_size(std::size_t n) { return Rational(static_cast<std::int64_t>(n)); }

void accumulate(Band& dst, std::size_t k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = dst.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) dst.erase(it);
  }
}

}  // namespace

BandedOp::BandedOp(int max_raise, std::vector<Band> images)
    : max_raise_(max_raise), images_(std::move(images)) {}

BandedOp BandedOp::from_action(std::size_t trunc_degree, int max_raise,
                               const std::function<Band(std::size_t)>& action) {
  std::vector<Band> images(trunc_degree + 1);
  for (std::size_t n = 0; n <= trunc_degree; ++n) {
    for (const auto& [k, c] : action(n)) {
      if (static_cast<long>(k) > static_cast<long>(n) + max_raise) {
        throw DomainError("banded operator image of x^" + std::to_string(n) + " reaches x^" +
                          std::to_string(k) + ", beyond its declared raise " + std::to_string(max_raise));
      }
      accumulate(images[n], k, c);
    }
  }
  return BandedOp(max_raise, std::move(images));
}

const Band& BandedOp::image(std::size_t n) const {
  if (n >= images_.size()) {
    throw TruncationError("x^" + std::to_string(n) + " is beyond the operator truncation degree " +
                          std::to_string(trunc_degree()));
  }
  return images_[n];
}

Poly BandedOp::apply(const Poly& p) const {
  const Degree d = p.degree();
  if (!d) return {};
  if (*d > trunc_degree()) {
    throw TruncationError("cannot apply operator truncated at degree " + std::to_string(trunc_degree()) +
                          " to a polynomial of degree " + std::to_string(*d));
  }
  std::vector<Rational> out(*d + static_cast<std::size_t>(std::max(max_raise_, 0)) + 1);
  for (std::size_t n = 0; n <= *d; ++n) {
    const Rational& pn = p.coeffs()[n];
    if (pn.is_zero()) continue;
    for (const auto& [k, c] : images_[n]) out[k] += pn * c;
  }
  return Poly(std::move(out));
}

BandedOp add(const BandedOp& a, const BandedOp& b) {
  const std::size_t N = std::min(a.trunc_degree(), b.trunc_degree());
  std::vector<Band> images(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    images[n] = a.images_[n];
    for (const auto& [k, c] : b.images_[n]) accumulate(images[n], k, c);
  }
  return BandedOp(std::max(a.max_raise_, b.max_raise_), std::move(images));
}

BandedOp scale(const Rational& c, const BandedOp& op) {
  std::vector<Band> images(op.images_.size());
  if (!c.is_zero()) {
    for (std::size_t n = 0; n < images.size(); ++n) {
      for (const auto& [k, v] : op.images_[n]) images[n].emplace(k, c * v);
    }
  }
  return BandedOp(op.max_raise_, std::move(images));
}

BandedOp compose(const BandedOp& outer, const BandedOp& inner) {
  const long reach = static_cast<long>(outer.trunc_degree()) - std::max(inner.max_raise_, 0);
  if (reach < 0) {
    throw TruncationError("composition leaves no monomial inside the outer operator's truncation");
  }
  const std::size_t N = std::min(inner.trunc_degree(), static_cast<std::size_t>(reach));
  std::vector<Band> images(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    for (const auto& [j, cj] : inner.images_[n]) {
      for (const auto& [k, ck] : outer.images_[j]) accumulate(images[n], k, cj * ck);
    }
  }
  return BandedOp(outer.max_raise_ + inner.max_raise_, std::move(images));
}

BandedOp subtract(const BandedOp& a, const BandedOp& b) { return add(a, scale(Rational(-1), b)); }

BandedOp commutator(const BandedOp& a, const BandedOp& b) { return subtract(compose(a, b), compose(b, a)); }

BandedOp anticommutator(const BandedOp& a, const BandedOp& b) { return add(compose(a, b), compose(b, a)); }

OpIdentityReport op_equal(const BandedOp& lhs, const BandedOp& rhs) {
  OpIdentityReport r;
  r.residual = subtract(lhs, rhs);
  r.safe_degree = r.residual.trunc_degree();
  for (std::size_t n = 0; n <= r.safe_degree; ++n) {
    if (!r.residual.image(n).empty()) {
      r.first_failing_monomial = n;
      break;
    }
  }
  r.holds = !r.first_failing_monomial.has_value();
  return r;
}

std::optional<Rational> scalar_multiple_of_identity(const BandedOp& op) {
  std::optional<Rational> s;
  for (std::size_t n = 0; n <= op.trunc_degree(); ++n) {
    const Band& b = op.image(n);
    Rational here(0);
    if (!b.empty()) {
      if (b.size() != 1 || b.begin()->first != n) return std::nullopt;
      here = b.begin()->second;
    }
    if (s && *s != here) return std::nullopt;
    s = here;
  }
  return s;
}

bool is_zero_op(const BandedOp& op) {
  for (std::size_t n = 0; n <= op.trunc_degree(); ++n) {
    if (!op.image(n).empty()) return false;
  }
  return true;
}

BandedOp identity_op(std::size_t N) {
  return BandedOp::from_action(N, 0, [](std::size_t n) { return Band{{n, Rational(1)}}; });
}

BandedOp reflection_op(std::size_t N) {
  return BandedOp::from_action(N, 0, [](std::size_t n) {
    return Band{{n, sign_power(static_cast<std::int64_t>(n))}};
  });
}

BandedOp derivative_op(std::size_t N) {
  return BandedOp::from_action(N, -1, [](std::size_t n) {
    return n == 0 ? Band{} : Band{{n - 1, from_size(n)}};
  });
}

BandedOp mult_x_op(std::size_t N) {
  return BandedOp::from_action(N, 1, [](std::size_t n) { return Band{{n + 1, Rational(1)}}; });
}

Rational dunkl_bracket(std::size_t n, const Rational& mu) {
  return n % 2 == 0 ? from_size(n) : from_size(n) + Rational(2) * mu;
}

BandedOp make_dunkl(const Rational& mu, std::size_t N) {
  return BandedOp::from_action(N, -1, [&mu](std::size_t n) {
    return n == 0 ? Band{} : Band{{n - 1, dunkl_bracket(n, mu)}};
  });
}

Rational L0_diagonal(std::size_t n, const Rational& alpha, const Rational& beta) {
  const Rational two_n = Rational(2) * from_size(n);
  if (n % 2 == 0) return -two_n;
  return two_n + Rational(2) * (alpha + beta + Rational(1));
}

Rational L0_subdiagonal(std::size_t n, const Rational& alpha) {
  const Rational two_n = Rational(2) * from_size(n);
  if (n % 2 == 0) return two_n;
  return -two_n - Rational(2) * alpha;
}

BandedOp make_L0(const Rational& alpha, const Rational& beta, std::size_t N) {
  return BandedOp::from_action(N, 0, [&](std::size_t n) {
    Band b;
    accumulate(b, n, L0_diagonal(n, alpha, beta));
    const Rational sub = L0_subdiagonal(n, alpha);
    if (n == 0) {
      if (!sub.is_zero()) throw ConsistencyError("L0 produced an x^-1 term on the constant");
    } else {
      accumulate(b, n - 1, sub);
    }
    return b;
  });
}

BandedOp make_theta(const Rational& alpha, const Rational& beta, std::size_t N) {
  const Rational half_alpha = alpha / Rational(2);
  return BandedOp::from_action(N, 1, [&](std::size_t n) {
    const Rational s = sign_power(static_cast<std::int64_t>(n));
    const Rational nn = from_size(n);
    Band b;
    accumulate(b, n + 1, nn + beta + half_alpha + s * half_alpha);
    accumulate(b, n, Rational(-1) - s * alpha);
    const Rational low = -nn - half_alpha + s * half_alpha;
    if (n == 0) {
      if (!low.is_zero()) throw ConsistencyError("Theta produced an x^-1 term on the constant");
    } else {
      accumulate(b, n - 1, low);
    }
    return b;
  });
}

BandedOp make_S0(const Rational& a, std::size_t N) {
  return BandedOp::from_action(N, 0, [&a](std::size_t n) {
    const Rational nn = from_size(n);
    Band b;
    accumulate(b, n, -nn * (nn + Rational(2) * a + Rational(2)));
    if (n >= 1) accumulate(b, n - 1, nn);
    if (n >= 2) accumulate(b, n - 2, nn * (nn - Rational(1)));
    return b;
  });
}

Rational intertwiner_sigma(std::size_t n, const Rational& mu) {
  const std::size_t m = (n + 1) / 2;
  const Rational half(1, 2);
  return pochhammer(half, m) / pochhammer(mu + half, m);
}

BandedOp make_intertwiner(const Rational& mu, std::size_t N) {
  if (mu <= Rational(-1, 2)) {
    throw DomainError("intertwiner requires mu > -1/2, got " + mu.str());
  }
  return BandedOp::from_action(N, 0, [&mu](std::size_t n) { return Band{{n, intertwiner_sigma(n, mu)}}; });
}

nlohmann::json to_json(const BandedOp& op) {
  nlohmann::json j = nlohmann::json::object();
  for (std::size_t n = 0; n <= op.trunc_degree(); ++n) {
    auto row = nlohmann::json::array();
    for (const auto& [k, c] : op.image(n)) row.push_back(nlohmann::json::array({k, c.str()}));
    j[std::to_string(n)] = std::move(row);
  }
  return j;
}

}  // namespace minusone
