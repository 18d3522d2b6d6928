#include "minusone/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace minusone {

QuadratureResult integrate_gk15(const std::function<double(double)>& f, double a, double b, double rel_tol,
                                unsigned max_depth) {
  QuadratureResult out;
  out.value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, max_depth, rel_tol,
                                                                            &out.error_estimate);
  return out;
}

}  // namespace minusone
