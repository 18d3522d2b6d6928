#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "minusone/rational.hpp"

namespace minusone::cli {

struct SuiteConfig {
  Rational alpha{1, 2};
  Rational beta{3, 2};
  Rational a{3, 2};
  std::optional<std::size_t> max_degree;
  std::size_t levels = 5;
  double lambda = 1.3;
  std::vector<double> epsilon_list{1e-3, 1e-4};
  std::size_t points = 200;
  std::string format = "text";
  std::string output;
};

struct CheckLine {
  std::string suite;
  std::string check;
  bool pass = false;
  bool skipped = false;
  std::string detail;
  /// Scaled residual of a floating-point check.
  std::optional<double> residual;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);

/// Runs one suite (or "all"). Checks run concurrently; the returned lines are
/// in a fixed order independent of scheduling. Throws DomainError when the
/// parameters are outside the suite's domain, except under "all", where the
/// suite is reported as skipped.
std::vector<CheckLine> run_suite(const std::string& name, const SuiteConfig& cfg);

}  // namespace minusone::cli
