#pragma once

#include "graphene/params.hpp"

namespace graphene {

enum class Band { Electron, Hole };

struct SpectrumLevel {
  int n = 0;
  Band band = Band::Electron;
  double energy = 0.0;
};

// Relativistic Landau level E_n = +/- hbar v_F sqrt(2 n D).  The n = 0 level
// is shared by both bands and returned as +0.0.
double landau_energy(int n, Band band, const DerivedParams& dp,
                     const PhysicalParams& phys);

// Partner potentials V-(x) = W^2 - W' and V+(x) = W^2 + W' generated by the
// linear superpotential W(x) = k1 + D x; the minus sector carries the
// zero mode, and v_plus - v_minus = 2D everywhere.
struct SusyPotentials {
  double v_minus = 0.0;
  double v_plus = 0.0;
};

SusyPotentials susy_potentials(double x, double k1, const DerivedParams& dp);

}  // namespace graphene
