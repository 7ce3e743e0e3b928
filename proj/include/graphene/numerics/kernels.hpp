#pragma once

namespace graphene::numerics {

// Lower incomplete gamma for small integer order: the integral of
// u^{s-1} e^{-u} over [0, t].  The direct form
// (s-1)! (1 - e^{-t} sum_{i<s} t^i / i!) cancels catastrophically as t -> 0,
// so below t_switch = 1/2 the alternating Taylor sum
// sum_k (-1)^k t^{s+k} / (k! (s+k)) is used instead.
double gamma_lower(int s, double t);

// Cancellation-safe 1 - e^{-t}(1 + t), i.e. gamma_lower(2, t); the series
// branch is t^2/2 - t^3/3 + t^4/8 - t^5/30 + ...
double stable_kernel_k2(double t);

}  // namespace graphene::numerics
