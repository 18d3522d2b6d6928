#pragma once

#include <functional>

namespace minusone {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

/// Adaptive Gauss-Kronrod 7/15 on [a, b] (Boost.Math), bisecting until the
/// error estimate is below rel_tol times the L1 norm or max_depth is reached.
/// f is never evaluated at a or b.
QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b,
                                double rel_tol = 1e-13, unsigned max_depth = 15);

}  // namespace minusone
