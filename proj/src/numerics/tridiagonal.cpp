#include "graphene/numerics/tridiagonal.hpp"

#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace graphene::numerics {

namespace {

// Number of eigenvalues strictly below x: the count of negative pivots in
// the LDL^T factorization of (m - x I).
int count_below(const TridiagonalMatrix& m, double x, double pivmin) {
  int count = 0;
  double q = m.diag[0] - x;
  for (std::size_t i = 0;;) {
    if (std::abs(q) < pivmin) q = -pivmin;  // keep the recurrence finite
    if (q < 0.0) ++count;
    if (++i == m.diag.size()) break;
    const double e = m.offdiag[i - 1];
    q = m.diag[i] - x - e * e / q;
  }
  return count;
}

}  // namespace

std::vector<double> eigen_smallest(const TridiagonalMatrix& m, int k) {
  const std::size_t n = m.diag.size();
  if (n < 2) {
    throw std::invalid_argument("eigen_smallest: matrix must be at least 2x2");
  }
  if (m.offdiag.size() != n - 1) {
    throw std::invalid_argument("eigen_smallest: offdiag needs N - 1 entries");
  }
  if (k < 1 || static_cast<std::size_t>(k) > n) {
    throw std::invalid_argument("eigen_smallest: k must be in [1, N]");
  }
  for (double v : m.diag) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("eigen_smallest: non-finite matrix entry");
    }
  }
  for (double v : m.offdiag) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("eigen_smallest: non-finite matrix entry");
    }
  }

  // Gershgorin enclosure of the full spectrum.
  double glo = DBL_MAX;
  double ghi = -DBL_MAX;
  double norm = 0.0;
  double emax2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(m.offdiag[i - 1]) : 0.0) +
                     (i + 1 < n ? std::abs(m.offdiag[i]) : 0.0);
    glo = std::min(glo, m.diag[i] - r);
    ghi = std::max(ghi, m.diag[i] + r);
    norm = std::max(norm, std::abs(m.diag[i]) + r);
    if (i + 1 < n) emax2 = std::max(emax2, m.offdiag[i] * m.offdiag[i]);
  }
  const double pivmin = std::max(emax2, 1.0) * DBL_MIN;
  // stop once the bracket is a few ulps wide (absolute floor for brackets
  // straddling zero); 200 iterations is far more than bisection ever needs
  const double tol = 4.0 * DBL_EPSILON * std::max(norm, DBL_MIN);

  std::vector<double> out(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) {
    double lo = glo;
    double hi = ghi;
    // invariant: count_below(lo) <= j < count_below(hi)
    for (int it = 0; it < 200 && hi - lo > tol; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval no longer splittable
      if (count_below(m, mid, pivmin) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    out[static_cast<std::size_t>(j)] = 0.5 * (lo + hi);
  }
  return out;
}

}  // namespace graphene::numerics
