#include "graphene/eigencheck.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace graphene::eigencheck {

namespace {

void validate_grid(const GridSpec& grid, const DerivedParams& dp, double k1) {
  if (!(dp.d > 0.0)) throw std::invalid_argument("zero-field: D must be positive");
  if (grid.n_points < 16) {
    throw std::invalid_argument("grid must have at least 16 points");
  }
  if (!(grid.x_min < grid.x_max)) {
    throw std::invalid_argument("grid window is empty");
  }
  const double x0 = -k1 / dp.d;
  const double margin = 6.0 / std::sqrt(dp.d);
  if (grid.x_min > x0 - margin || grid.x_max < x0 + margin) {
    throw std::invalid_argument(
        "grid-window-too-small: the window must cover the potential minimum "
        "with margin 6/sqrt(D) on each side");
  }
}

}  // namespace

GridSpec reference_grid(const DerivedParams& dp, double k1) {
  if (!(dp.d > 0.0)) throw std::invalid_argument("zero-field: D must be positive");
  const double x0 = -k1 / dp.d;
  const double half = 12.0 / std::sqrt(dp.d);
  return {x0 - half, x0 + half, 2001};
}

numerics::TridiagonalMatrix build_hamiltonian(const DerivedParams& dp,
                                              double k1, const GridSpec& grid) {
  validate_grid(grid, dp, k1);
  const double h = (grid.x_max - grid.x_min) / (grid.n_points - 1);
  const double inv_h2 = 1.0 / (h * h);
  const int n_interior = grid.n_points - 2;  // Dirichlet walls at both ends
  numerics::TridiagonalMatrix m;
  m.diag.resize(static_cast<std::size_t>(n_interior));
  m.offdiag.assign(static_cast<std::size_t>(n_interior - 1), -inv_h2);
  for (int i = 0; i < n_interior; ++i) {
    const double x = grid.x_min + h * (i + 1);
    m.diag[static_cast<std::size_t>(i)] =
        2.0 * inv_h2 + susy_potentials(x, k1, dp).v_minus;
  }
  return m;
}

SpectrumReport verify_spectrum(const DerivedParams& dp, double k1,
                               const GridSpec& grid, int n_levels) {
  if (n_levels < 1 || n_levels > 12) {
    throw std::invalid_argument(
        "grid accuracy budget: n_levels must be in [1, 12]");
  }
  SpectrumReport rep;
  rep.grid = grid;
  rep.computed = numerics::eigen_smallest(build_hamiltonian(dp, k1, grid),
                                          n_levels);
  rep.analytic.resize(rep.computed.size());
  rep.deviation.resize(rep.computed.size());
  for (std::size_t i = 0; i < rep.computed.size(); ++i) {
    rep.analytic[i] = 2.0 * static_cast<double>(i) * dp.d;
    rep.deviation[i] = rep.computed[i] - rep.analytic[i];
    rep.max_abs_deviation =
        std::max(rep.max_abs_deviation, std::abs(rep.deviation[i]));
  }
  return rep;
}

std::vector<SpectrumLevel> dirac_levels_from_oracle(const SpectrumReport& rep,
                                                    const PhysicalParams& phys,
                                                    double tolerance) {
  if (!(tolerance > 0.0)) {
    throw std::invalid_argument("tolerance must be positive");
  }
  std::vector<SpectrumLevel> out;
  out.reserve(2 * rep.computed.size());
  for (std::size_t i = 0; i < rep.computed.size(); ++i) {
    double eps = rep.computed[i];
    if (eps < -10.0 * tolerance) {
      std::ostringstream msg;
      msg << "negative-eigenvalue: grid eigenvalue " << eps
          << " is below -10 * tolerance; the discretization failed";
      throw std::domain_error(msg.str());
    }
    if (eps < 0.0) eps = 0.0;  // discretization droop within budget
    const double e = phys.hbar * phys.v_f * std::sqrt(eps);
    const int n = static_cast<int>(i);
    out.push_back({n, Band::Electron, e});
    out.push_back({n, Band::Hole, e == 0.0 ? 0.0 : -e});
  }
  return out;
}

}  // namespace graphene::eigencheck
