#pragma once

#include <functional>
#include <stdexcept>

namespace graphene::numerics {

struct QuadratureResult {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  long evaluations = 0;
};

// Thrown when the subdivision budget runs out before the tolerance is met;
// carries the best estimate obtained so far.
class QuadratureBudgetError : public std::runtime_error {
 public:
  explicit QuadratureBudgetError(const QuadratureResult& best_so_far);
  QuadratureResult best;
};

// Adaptive Gauss-Kronrod (7,15) integration of f over [lo, hi].  Panels are
// split worst-first until the summed error estimate drops below
// rel_tol * |value| or the error held by panels at their round-off floor
// already exceeds that target (further splitting cannot close the gap, so
// the best achievable estimate is returned with its honest error bound);
// exhausting the budget first raises QuadratureBudgetError.  rel_tol must
// lie in (0, 1e-2].  Deterministic for fixed inputs.
QuadratureResult integrate(const std::function<double(double)>& f, double lo,
                           double hi, double rel_tol);

// Integral of f over [lo, inf), mapped onto s in [0, 1) by the substitution
// u = lo - ln(1 - s) (du = ds / (1 - s)) and delegated to integrate.  Suited
// to integrands decaying at least as fast as e^{-u}; the tail beyond the
// resolvable window is covered by the panel error estimates.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f,
                                         double lo, double rel_tol);

}  // namespace graphene::numerics
