#pragma once

#include <vector>

namespace graphene::numerics {

// Symmetric tridiagonal matrix: diag holds N entries, offdiag N - 1.
struct TridiagonalMatrix {
  std::vector<double> diag;
  std::vector<double> offdiag;
};

// The k smallest eigenvalues in ascending order, found by bisection on the
// Sturm sign count of the shifted LDL^T pivots; each bracket is shrunk to a
// few ulps of ||m||_inf.  Requires N >= 2 and 1 <= k <= N.
std::vector<double> eigen_smallest(const TridiagonalMatrix& m, int k);

}  // namespace graphene::numerics
