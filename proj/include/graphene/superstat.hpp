#pragma once

#include <span>
#include <vector>

#include "graphene/numerics/quadrature.hpp"
#include "graphene/params.hpp"

namespace graphene::superstat {

// Strength of the second-order correction to the Boltzmann weight.  q = 0 is
// the ordinary canonical factor; [0, 1] is accepted by default, larger
// values only with permissive set.
struct SuperstatConfig {
  double q = 0.5;
  bool permissive = false;
};

void validate(const SuperstatConfig& cfg);

struct SuperstatPoint {
  double beta = 0.0;
  double q = 0.0;
  double z_s = 0.0;
  double u_s = 0.0;
  double c_s = 0.0;
  double s_s = 0.0;
  double f_s = 0.0;
};

// Generalized Boltzmann factor B = e^{-beta E} (1 + q beta^2 E^2 / 2).
double boltzmann_factor_q(double energy, double beta, double q);

// Z_s = (2 + 6 q) / (a^2 beta^2).  For lambda_max = 1 (a^2 = 2 b) this
// equals the level integral (1 + 3 q) / (b beta^2); for other lambda_max the
// closed form differs from the integral by exactly the factor 1/lambda_max,
// which the CLI surfaces as a warning.
double partition_super_closed(double beta, double q, const DerivedParams& dp);

// The level integral of B(E(n)) over n in [0, inf) by quadrature; with
// t = beta E(n) it becomes (1/(b beta^2)) * integral of
// t e^{-t} (1 + q t^2/2), i.e. (Gamma(2) + (q/2) Gamma(4)) / (b beta^2)
// = (1 + 3 q) / (b beta^2).
numerics::QuadratureResult partition_super_integral(double beta, double q,
                                                    const DerivedParams& dp,
                                                    double rel_tol);

double mean_energy_s(double beta, double q);  // 2 / beta, independent of q
double free_energy_s(double beta, double q, const DerivedParams& dp);
double entropy_s(double beta, double q, const DerivedParams& dp,
                 double k_boltz = 1.0);       // k (2 + ln Z_s)
double heat_capacity_s(double q, double k_boltz = 1.0);  // 2 k, flat

// Pointwise sweep at fixed q; rejects an empty grid ("empty-sweep").
std::vector<SuperstatPoint> superstat_sweep(std::span<const double> betas,
                                            double q, const DerivedParams& dp,
                                            double k_boltz = 1.0);

}  // namespace graphene::superstat
