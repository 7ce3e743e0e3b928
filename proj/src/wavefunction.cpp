#include "graphene/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "graphene/numerics/quadrature.hpp"

namespace graphene {

namespace {

void check_level(int n) {
  if (n < 0) throw std::invalid_argument("level index must be >= 0");
  if (n > 64) {
    // H_n overflows double well before this; nothing upstream needs it
    throw std::invalid_argument("level index too large for the recurrence");
  }
}

void check_params(const DerivedParams& dp) {
  if (!(dp.d > 0.0)) throw std::invalid_argument("zero-field: D must be positive");
}

double shifted_z(double x, double k1, const DerivedParams& dp) {
  return std::sqrt(dp.d) * (x + k1 / dp.d);
}

double raw_psi(int n, double z) { return std::exp(-0.5 * z * z) * hermite(n, z); }

}  // namespace

double hermite(int n, double z) {
  check_level(n);
  if (n == 0) return 1.0;
  double hm = 1.0;        // H_0
  double h = 2.0 * z;     // H_1
  for (int m = 1; m < n; ++m) {
    const double hp = 2.0 * z * h - 2.0 * m * hm;
    hm = h;
    h = hp;
  }
  return h;
}

double wavefunction_norm_constant(int n, const DerivedParams& dp) {
  check_level(n);
  check_params(dp);
  // integral of psi_raw^2 dx = (1/sqrt(D)) * integral of e^{-z^2} H_n^2 dz;
  // the Gaussian tail puts everything inside |z| <= 12 + n/2 at this order
  const double lz = 12.0 + 0.5 * n;
  const auto res = numerics::integrate(
      [n](double z) {
        const double p = raw_psi(n, z);
        return p * p;
      },
      -lz, lz, 1e-12);
  return 1.0 / std::sqrt(res.value / std::sqrt(dp.d));
}

double wavefunction(int n, double x, double k1, const DerivedParams& dp,
                    Normalization norm) {
  check_level(n);
  check_params(dp);
  const double value = raw_psi(n, shifted_z(x, k1, dp));
  if (norm == Normalization::Raw) return value;
  return wavefunction_norm_constant(n, dp) * value;
}

WavefunctionSample wavefunction_pair(int n, double x, double k1,
                                     const DerivedParams& dp,
                                     Normalization norm) {
  WavefunctionSample s;
  s.x = x;
  s.k1 = k1;
  s.psi_upper = wavefunction(n, x, k1, dp, norm);
  s.psi_lower = wavefunction(n + 1, x, k1, dp, norm);
  return s;
}

SpinorSample spinor(int n, double x, double y, double k1,
                    const DerivedParams& dp) {
  const WavefunctionSample s =
      wavefunction_pair(n, x, k1, dp, Normalization::Normalized);
  const std::complex<double> phase = std::polar(1.0, k1 * y);  // e^{i k1 y}
  return {phase * s.psi_upper,
          std::complex<double>(0.0, 1.0) * phase * s.psi_lower};
}

}  // namespace graphene
