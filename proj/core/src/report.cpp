#include "minusone/report.hpp"

#include <algorithm>

namespace minusone {

CheckReport compare_polys(std::string check, nlohmann::json params, std::size_t n, Poly lhs, Poly rhs) {
  CheckReport r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.n = n;
  const std::size_t len = std::max(lhs.coeffs().size(), rhs.coeffs().size());
  for (std::size_t k = 0; k < len; ++k) {
    if (lhs.coeff(k) != rhs.coeff(k)) {
      r.first_mismatch_degree = k;
      break;
    }
  }
  r.holds = !r.first_mismatch_degree.has_value();
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  return r;
}

nlohmann::json to_json(const CheckReport& r) {
  nlohmann::json j;
  j["check"] = r.check;
  j["params"] = r.params;
  j["n"] = r.n;
  j["holds"] = r.holds;
  j["first_mismatch_degree"] =
      r.first_mismatch_degree ? nlohmann::json(*r.first_mismatch_degree) : nlohmann::json(nullptr);
  j["lhs"] = to_json(r.lhs);
  j["rhs"] = to_json(r.rhs);
  return j;
}

}  // namespace minusone
