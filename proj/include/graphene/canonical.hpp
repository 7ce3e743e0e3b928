#pragma once

#include <span>
#include <vector>

#include "graphene/numerics/quadrature.hpp"
#include "graphene/params.hpp"

namespace graphene::canonical {

struct ThermoPoint {
  double beta = 0.0;
  double z = 0.0;
  double u = 0.0;
  double c = 0.0;
  double s = 0.0;
  double f = 0.0;
};

// Continuum partition function: the level sum over n in [0, lambda_max] of
// e^{-beta E(n)} with E(n) = sqrt(2 n b), which closes to
// Z = [1 - e^{-beta a}(1 + beta a)] / (beta^2 b), evaluated through the
// cancellation-safe kernel.  beta <= 0 signals "nonphysical-temperature".
double partition_closed(double beta, const DerivedParams& dp);

// The same quantity by adaptive quadrature.  Substituting t = beta E(n)
// turns the level integral into (1/(b beta^2)) * integral of t e^{-t} over
// [0, beta a], removing the sqrt kink at n = 0.
numerics::QuadratureResult partition_integral(double beta,
                                              const DerivedParams& dp,
                                              double rel_tol);

// U = -d ln Z / d beta = g3(beta a) / (beta g2(beta a)) with gs the lower
// incomplete gamma of order s; the numerator's leading term is (beta a)^3/3.
double mean_energy(double beta, const DerivedParams& dp);

// C = k beta^2 d2 ln Z / d beta2, evaluated in the variance form
// k (g4 g2 - g3^2) / g2^2, which stays accurate down to beta -> 0 where the
// direct expression loses every digit.
double heat_capacity(double beta, const DerivedParams& dp,
                     double k_boltz = 1.0);

double entropy(double beta, const DerivedParams& dp,
               double k_boltz = 1.0);                      // k ln Z + k beta U
double free_energy(double beta, const DerivedParams& dp);  // -ln Z / beta

// Pointwise sweep; rejects an empty grid ("empty-sweep").
std::vector<ThermoPoint> thermo_sweep(std::span<const double> betas,
                                      const DerivedParams& dp,
                                      double k_boltz = 1.0);

// Literal textbook expressions without the stable kernels.  They cancel
// catastrophically below beta a ~ 0.5 and exist only to cross-check the
// kernel-based forms on the safe side of that threshold.
double partition_direct(double beta, const DerivedParams& dp);
double mean_energy_direct(double beta, const DerivedParams& dp);
double heat_capacity_direct(double beta, const DerivedParams& dp,
                            double k_boltz = 1.0);

}  // namespace graphene::canonical
