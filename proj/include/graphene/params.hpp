#pragma once

namespace graphene {

enum class Units { Natural, SI };

// Fundamental constants plus the applied perpendicular field B0.  Natural
// mode fixes hbar = v_F = c = e = k_B = 1, so b0 coincides with the
// oscillator parameter D; SI mode carries CODATA values and b0 in tesla.
struct PhysicalParams {
  double hbar = 1.0;
  double v_f = 1.0;
  double c = 1.0;
  double e_charge = 1.0;
  double k_boltz = 1.0;
  double b0 = 1.0;
  Units units = Units::Natural;

  static PhysicalParams natural(double d);
  static PhysicalParams si(double b0_tesla);
};

// Field-derived quantities: D = e B0 / (c hbar), the energy-squared scale
// b = D hbar^2 v_F^2, the level cutoff lambda_max, and the top-of-band
// energy a = sqrt(2 b lambda_max).
struct DerivedParams {
  double d = 0.0;
  double lambda_max = 0.0;
  double a = 0.0;
  double b = 0.0;
};

// Rejects b0 <= 0 ("zero-field") and lambda_max <= 0.
DerivedParams derive_params(const PhysicalParams& phys, double lambda_max);

}  // namespace graphene
