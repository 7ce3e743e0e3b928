#include "graphene/numerics/derivative.hpp"

#include <cmath>
#include <stdexcept>

namespace graphene::numerics {

namespace {

double stencil(const std::function<double(double)>& f, double x, int order,
               double h) {
  if (x + h == x || x - h == x) {
    throw std::invalid_argument(
        "step-underflow: h is indistinguishable from zero next to x");
  }
  if (order == 1) return (f(x + h) - f(x - h)) / (2.0 * h);
  return (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h);
}

}  // namespace

double derivative(const std::function<double(double)>& f, double x, int order,
                  double h) {
  if (order != 1 && order != 2) {
    throw std::invalid_argument("derivative: order must be 1 or 2");
  }
  if (!(h > 0.0) || !std::isfinite(h)) {
    throw std::invalid_argument("derivative: h must be positive and finite");
  }
  // both stencils are O(h^2), so one Richardson step cancels that term
  const double coarse = stencil(f, x, order, h);
  const double fine = stencil(f, x, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

}  // namespace graphene::numerics
