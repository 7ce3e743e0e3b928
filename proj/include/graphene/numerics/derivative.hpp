#pragma once

#include <functional>

namespace graphene::numerics {

// Central-difference derivative of order 1 or 2 with one Richardson
// extrapolation step (steps h and h/2 combined as (4 d_{h/2} - d_h)/3).
// Signals "step-underflow" when x +/- h is indistinguishable from x.
double derivative(const std::function<double(double)>& f, double x, int order,
                  double h);

}  // namespace graphene::numerics
