#include "minusone/poly.hpp"

#include <sstream>

namespace minusone {

Poly::Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

Poly Poly::constant(const Rational& c) { return Poly({c}); }

Poly Poly::monomial(std::size_t k, const Rational& c) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Degree Poly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational Poly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& Poly::leading() const {
  if (coeffs_.empty()) throw ConsistencyError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double Poly::operator()(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& a : coeffs_) a *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(out));
}

Poly Poly::monic() const { return *this * (Rational(1) / leading()); }

Poly Poly::compose_x2() const {
  if (is_zero()) return {};
  std::vector<Rational> out(2 * coeffs_.size() - 1);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[2 * k] = coeffs_[k];
  return Poly(std::move(out));
}

Poly Poly::compose_affine(const Rational& c0, const Rational& c1) const {
  // Horner in polynomial arithmetic.
  const Poly lin({c0, c1});
  Poly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * lin + Poly::constant(*it);
  return acc;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    out[k - 1] = coeffs_[k] * Rational(static_cast<std::int64_t>(k));
  }
  return Poly(std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool neg = c.sign() < 0;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    const Rational mag = abs(c);
    const bool unit = mag == Rational(1);
    if (!unit || i == 0) {
      os << (mag.is_integer() ? mag.numerator_str() : mag.str());
    }
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

QuotientRemainder divide(const Poly& dividend, const Poly& divisor) {
  if (divisor.is_zero()) throw DomainError("polynomial division by zero");
  const std::size_t dd = *divisor.degree();
  std::vector<Rational> rem(dividend.coeffs().begin(), dividend.coeffs().end());
  if (rem.size() <= dd) return {Poly(), dividend};
  std::vector<Rational> quo(rem.size() - dd);
  const Rational& lead = divisor.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k].is_zero()) continue;
    const Rational q = rem[k] / lead;
    quo[k - dd] = q;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Rational pochhammer(const Rational& x, std::size_t n) {
  Rational out(1);
  for (std::size_t i = 0; i < n; ++i) out *= x + Rational(static_cast<std::int64_t>(i));
  return out;
}

ParityPair parity_split(const Poly& p) {
  std::vector<Rational> even(p.coeffs().size());
  std::vector<Rational> odd(p.coeffs().size());
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) (k % 2 == 0 ? even : odd)[k] = p.coeffs()[k];
  return {Poly(std::move(even)), Poly(std::move(odd))};
}

Poly reflect(const Poly& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 1; k < out.size(); k += 2) out[k] = -out[k];
  return Poly(std::move(out));
}

Poly terminating_2f1(const Rational& a, const Rational& b, const Rational& c, int arg_power) {
  if (!a.is_integer() || a.sign() > 0) {
    throw DomainError("terminating_2f1: first numerator parameter must be a nonpositive integer, got " +
                      a.str());
  }
  if (arg_power != 1 && arg_power != 2) throw DomainError("terminating_2f1: arg_power must be 1 or 2");
  const auto terms = static_cast<std::size_t>(-a.raw().get_num().get_si());
  const auto step = static_cast<std::size_t>(arg_power);
  std::vector<Rational> out(terms * step + 1);
  Rational term(1);
  for (std::size_t k = 0;; ++k) {
    out[k * step] = term;
    if (k == terms) break;
    const Rational kk(static_cast<std::int64_t>(k));
    const Rational denom = (c + kk) * (kk + Rational(1));
    if (denom.is_zero()) {
      throw DomainError("terminating_2f1: (c)_k vanishes inside the summation range (c = " + c.str() + ")");
    }
    term *= (a + kk) * (b + kk) / denom;
  }
  return Poly(std::move(out));
}

nlohmann::json to_json(const Poly& p) {
  auto j = nlohmann::json::array();
  for (const auto& c : p.coeffs()) j.push_back(c.str());
  return j;
}

Poly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw DomainError("polynomial JSON must be an array of \"num/den\" strings");
  std::vector<Rational> v;
  v.reserve(j.size());
  for (const auto& e : j) {
    if (!e.is_string()) throw DomainError("polynomial JSON entries must be strings");
    v.push_back(Rational::parse(e.get<std::string>()));
  }
  return Poly(std::move(v));
}

}  // namespace minusone
