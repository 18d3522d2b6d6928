#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "minusone/poly.hpp"

namespace minusone {

/// Outcome of an exact polynomial identity check. `lhs` and `rhs` are the two
/// independently computed sides.
struct CheckReport {
  std::string check;
  nlohmann::json params = nlohmann::json::object();
  std::size_t n = 0;
  bool holds = false;
  /// Lowest power at which lhs and rhs differ; empty when they agree.
  std::optional<std::size_t> first_mismatch_degree;
  Poly lhs;
  Poly rhs;
};

/// Compares both sides coefficient-wise and fills holds/first_mismatch_degree.
CheckReport compare_polys(std::string check, nlohmann::json params, std::size_t n, Poly lhs, Poly rhs);

/// {check, params, n, holds, first_mismatch_degree, lhs, rhs}; the mismatch
/// degree is null when the check holds.
nlohmann::json to_json(const CheckReport& r);

}  // namespace minusone
