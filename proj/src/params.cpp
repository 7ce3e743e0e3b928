#include "graphene/params.hpp"

#include <cmath>
#include <stdexcept>

namespace graphene {

PhysicalParams PhysicalParams::natural(double d) {
  PhysicalParams p;
  p.b0 = d;  // with e = c = hbar = 1 the field strength is D itself
  p.units = Units::Natural;
  return p;
}

PhysicalParams PhysicalParams::si(double b0_tesla) {
  PhysicalParams p;
  p.hbar = 1.054571817e-34;      // J s
  p.c = 2.99792458e8;            // m / s
  p.v_f = p.c / 300.0;           // graphene Fermi velocity ~ 1e6 m/s
  p.e_charge = 1.602176634e-19;  // C
  p.k_boltz = 1.380649e-23;      // J / K
  p.b0 = b0_tesla;
  p.units = Units::SI;
  return p;
}

DerivedParams derive_params(const PhysicalParams& phys, double lambda_max) {
  if (!(phys.hbar > 0.0) || !(phys.v_f > 0.0) || !(phys.c > 0.0) ||
      !(phys.e_charge > 0.0) || !(phys.k_boltz > 0.0)) {
    throw std::invalid_argument("physical constants must be positive");
  }
  if (!(phys.b0 > 0.0)) {
    throw std::invalid_argument("zero-field: b0 must be positive");
  }
  if (!(lambda_max > 0.0) || !std::isfinite(lambda_max)) {
    throw std::invalid_argument("lambda must be positive");
  }
  DerivedParams dp;
  dp.d = phys.e_charge * phys.b0 / (phys.c * phys.hbar);
  dp.b = dp.d * phys.hbar * phys.hbar * phys.v_f * phys.v_f;
  dp.lambda_max = lambda_max;
  dp.a = std::sqrt(2.0 * dp.b * lambda_max);
  return dp;
}

}  // namespace graphene
