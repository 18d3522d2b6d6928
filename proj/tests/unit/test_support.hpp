#pragma once

#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>

#include "minusone/poly.hpp"
#include "minusone/rational.hpp"

namespace minusone::testing {

inline Rational R(const std::string& text) { return Rational::parse(text); }

/// Seeded from MINUSONE_SEED when set, so failures are reproducible.
inline std::mt19937_64 make_rng() {
  std::uint64_t seed = 20240611;
  if (const char* env = std::getenv("MINUSONE_SEED")) seed = std::strtoull(env, nullptr, 10);
  return std::mt19937_64(seed);
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-40, 40);
  std::uniform_int_distribution<std::int64_t> den(1, 12);
  return Rational(num(rng), den(rng));
}

inline Poly random_poly(std::mt19937_64& rng, std::size_t max_degree) {
  std::uniform_int_distribution<std::size_t> deg(0, max_degree);
  std::vector<Rational> c(deg(rng) + 1);
  for (auto& x : c) x = random_rational(rng);
  return Poly(std::move(c));
}

}  // namespace minusone::testing
