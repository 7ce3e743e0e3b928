#pragma once

#include <vector>

#include "graphene/numerics/tridiagonal.hpp"
#include "graphene/params.hpp"
#include "graphene/spectrum.hpp"

namespace graphene::eigencheck {

struct GridSpec {
  double x_min = 0.0;
  double x_max = 0.0;
  int n_points = 0;
};

// Window of half-width 12/sqrt(D) around the potential minimum -k1/D with
// 2001 points; comfortably confines the first dozen oscillator states.
GridSpec reference_grid(const DerivedParams& dp, double k1);

// Second-order finite-difference discretization of -d2/dx2 + V-(x) with
// Dirichlet walls: interior points only, diag_i = 2/h^2 + V-(x_i),
// offdiag = -1/h^2, h = (x_max - x_min)/(n_points - 1).  The window must
// hold at least 16 points and cover the potential minimum with margin
// 6/sqrt(D) on each side ("grid-window-too-small" otherwise).
numerics::TridiagonalMatrix build_hamiltonian(const DerivedParams& dp,
                                              double k1, const GridSpec& grid);

struct SpectrumReport {
  GridSpec grid;
  std::vector<double> computed;   // grid eigenvalues, ascending
  std::vector<double> analytic;   // 2 n D
  std::vector<double> deviation;  // computed - analytic
  double max_abs_deviation = 0.0;
};

// Compares the lowest n_levels grid eigenvalues against 2 n D.  More than 12
// levels exceeds the grid accuracy budget and is rejected.
SpectrumReport verify_spectrum(const DerivedParams& dp, double k1,
                               const GridSpec& grid, int n_levels);

// Maps oracle eigenvalues eps_n back to Dirac energies
// +/- hbar v_F sqrt(eps_n), one electron and one hole entry per level.
// Discretization droop down to -10*tolerance clamps to zero; anything below
// that signals "negative-eigenvalue".
std::vector<SpectrumLevel> dirac_levels_from_oracle(const SpectrumReport& rep,
                                                    const PhysicalParams& phys,
                                                    double tolerance = 1e-3);

}  // namespace graphene::eigencheck
