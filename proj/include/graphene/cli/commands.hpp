#pragma once

#include <iosfwd>
#include <vector>

#include "graphene/cli/run_config.hpp"

namespace graphene::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;   // bad flags, config, or ranges
inline constexpr int kExitComputation = 2;  // numerical failure mid-run
inline constexpr int kExitIo = 3;           // unreadable/unwritable paths
inline constexpr int kExitEigen = 4;        // eigencheck above threshold

// Each command validates, computes, writes CSV (cfg.out; "-"/"" = stdout)
// and returns one of the exit codes above.  Diagnostics go to stderr.

// Columns n, e_electron, e_hole for n = 0..n_max.
int cmd_spectrum(const RunConfig& cfg, int n_max);

// Columns beta, z, u, c, s, f over the configured beta grid.  Every row is
// checked against f = u - s/(k beta) before writing.
int cmd_thermo(const RunConfig& cfg);

// Columns beta, q, z_s, u_s, c_s, s_s, f_s; warns on stderr when
// lambda_max != 1 (the closed form bakes in a^2 = 2 b).
int cmd_superstat(const RunConfig& cfg);

struct BoltzmannOptions {
  double e_fixed = 1.0;   // energy for the beta section
  double beta_fixed = 1.0;  // beta for the energy section
  double e_max = 5.0;
  int e_count = 200;
  std::vector<double> q_list = {0.0, 0.25, 0.5, 0.75, 1.0};
  bool split = false;  // two files <out>_beta.csv/<out>_energy.csv
};

// Generalized Boltzmann factor tables: one section over beta at fixed E and
// one over E in [0, e_max] at fixed beta, with dB/dbeta tabulated alongside.
int cmd_boltzmann(const RunConfig& cfg, const BoltzmannOptions& opt);

// Grid-eigensolver check of the first n_levels against 2 n D; text report to
// `report`, optional CSV to cfg.out, exit 4 when the worst deviation
// exceeds cfg.tolerance.
int cmd_eigencheck(const RunConfig& cfg, double k1, int n_levels,
                   std::ostream& report);

// Writes fig1_spectrum.csv, fig1_boltzmann.csv, fig2_partition.csv,
// fig3_energy.csv, fig4_heat.csv, fig5_entropy.csv, fig6_free.csv into the
// directory cfg.out (default "figdata").  Byte-deterministic.
int cmd_figdata(const RunConfig& cfg);

}  // namespace graphene::cli
