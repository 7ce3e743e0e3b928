#include "graphene/numerics/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace graphene::numerics {

namespace {

constexpr double kSwitch = 0.5;

double factorial(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

double gamma_lower(int s, double t) {
  if (s < 1 || s > 8) {
    throw std::invalid_argument("gamma_lower: order must be in [1, 8]");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw std::invalid_argument("gamma_lower: t must be finite and >= 0");
  }
  if (t < kSwitch) {
    // sum_k (-1)^k t^{s+k} / (k! (s+k)); every partial sum is exact to
    // round-off since nothing ever cancels against a term of order one
    double num = std::pow(t, s);  // (-1)^k t^{s+k} / k!
    double sum = num / s;
    for (int k = 1; k <= 40; ++k) {
      num *= -t / k;
      const double term = num / (s + k);
      sum += term;
      if (std::abs(term) <= 1e-18 * std::abs(sum)) break;
    }
    return sum;
  }
  if (t > 700.0) return factorial(s - 1);  // e^{-t} underflows; tail is gone
  double poly = 0.0;
  double ti = 1.0;
  for (int i = 0; i < s; ++i) {
    poly += ti / factorial(i);
    ti *= t;
  }
  return factorial(s - 1) * (1.0 - std::exp(-t) * poly);
}

double stable_kernel_k2(double t) { return gamma_lower(2, t); }

}  // namespace graphene::numerics
