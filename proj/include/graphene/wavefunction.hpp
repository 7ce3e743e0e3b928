#pragma once

#include <complex>

#include "graphene/params.hpp"

namespace graphene {

// Physicists' Hermite polynomial H_n via the three-term recurrence
// H_{n+1}(z) = 2 z H_n(z) - 2 n H_{n-1}(z).
double hermite(int n, double z);

enum class Normalization { Raw, Normalized };

// Oscillator eigenfunction in the shifted variable z = sqrt(D) (x + k1/D):
// psi_n(x) = C_n exp(-z^2/2) H_n(z).  Raw omits C_n; Normalized fixes the
// L2 norm over x to one, with C_n obtained by quadrature rather than a
// closed form.
double wavefunction(int n, double x, double k1, const DerivedParams& dp,
                    Normalization norm);

// C_n = 1 / sqrt(integral of psi_raw^2 dx); independent of k1.
double wavefunction_norm_constant(int n, const DerivedParams& dp);

// Both spinor amplitudes at one point (psi_n drives the upper component,
// psi_{n+1} the lower one).
struct WavefunctionSample {
  double x = 0.0;
  double k1 = 0.0;
  double psi_upper = 0.0;  // psi_n(x)
  double psi_lower = 0.0;  // psi_{n+1}(x)
};

WavefunctionSample wavefunction_pair(int n, double x, double k1,
                                     const DerivedParams& dp,
                                     Normalization norm);

struct SpinorSample {
  std::complex<double> upper;
  std::complex<double> lower;
};

// Two-component eigenspinor (e^{i k1 y} psi_n, i e^{i k1 y} psi_{n+1}) built
// from Normalized components; |upper| and |lower| are y-independent.
SpinorSample spinor(int n, double x, double y, double k1,
                    const DerivedParams& dp);

}  // namespace graphene
