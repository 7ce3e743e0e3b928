#include "graphene/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace graphene {

double landau_energy(int n, Band band, const DerivedParams& dp,
                     const PhysicalParams& phys) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  const double mag = phys.hbar * phys.v_f * std::sqrt(2.0 * n * dp.d);
  if (mag == 0.0) return 0.0;  // shared n = 0 level, avoid -0.0
  return band == Band::Hole ? -mag : mag;
}

SusyPotentials susy_potentials(double x, double k1, const DerivedParams& dp) {
  const double w = k1 + dp.d * x;  // W(x); W' = D
  return {w * w - dp.d, w * w + dp.d};
}

}  // namespace graphene
