// glandau: Landau levels and thermodynamics of graphene in a magnetic field.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphene/cli/commands.hpp"
#include "graphene/cli/run_config.hpp"

namespace {

using graphene::cli::RunConfig;

struct CommonFlags {
  std::string config;
  std::string units = "natural";
  double field = 1.0;
  double lambda_max = 1.0;
  double q = 0.5;
  double k_boltz = 1.0;
  double beta_min = 0.01;
  double beta_max = 100.0;
  int beta_count = 100;
  std::string beta_spacing = "log";
  std::string out;
  bool permissive_q = false;
  double tolerance = 1e-3;
};

void add_common(CLI::App& app, CommonFlags& f) {
  app.add_option("--config", f.config, "flat key = value config file");
  app.add_option("--units", f.units, "unit system")
      ->check(CLI::IsMember({"natural", "si"}));
  app.add_option("--field,--D,--B0", f.field,
                 "field strength: D in natural units, B0 in tesla in SI");
  app.add_option("--lambda", f.lambda_max, "spectral cutoff lambda_max");
  app.add_option("--q", f.q, "deformation parameter");
  app.add_option("--k", f.k_boltz, "Boltzmann constant (natural units only)");
  app.add_option("--beta-min", f.beta_min, "smallest inverse temperature");
  app.add_option("--beta-max", f.beta_max, "largest inverse temperature");
  app.add_option("--beta-count", f.beta_count, "number of beta grid points");
  app.add_option("--beta-spacing", f.beta_spacing, "beta grid spacing")
      ->check(CLI::IsMember({"log", "linear"}));
  app.add_option("--out,-o", f.out, "output path ('-' = stdout)");
  app.add_flag("--permissive-q", f.permissive_q, "allow q outside [0, 1]");
  app.add_option("--tolerance", f.tolerance, "eigencheck pass threshold");
}

// Config file first, then every flag the user actually typed on top.
RunConfig resolve(const CLI::App& app, const CommonFlags& f) {
  RunConfig cfg;
  if (app.count("--config") > 0) cfg = graphene::cli::load_config(f.config);
  if (app.count("--units") > 0) {
    cfg.units = (f.units == "si") ? graphene::Units::SI
                                  : graphene::Units::Natural;
  }
  if (app.count("--field") > 0) cfg.field = f.field;
  if (app.count("--lambda") > 0) cfg.lambda_max = f.lambda_max;
  if (app.count("--q") > 0) cfg.q = f.q;
  if (app.count("--k") > 0) cfg.k_boltz = f.k_boltz;
  if (app.count("--beta-min") > 0) cfg.beta_grid.min = f.beta_min;
  if (app.count("--beta-max") > 0) cfg.beta_grid.max = f.beta_max;
  if (app.count("--beta-count") > 0) cfg.beta_grid.count = f.beta_count;
  if (app.count("--beta-spacing") > 0) {
    cfg.beta_grid.spacing = (f.beta_spacing == "linear")
                                ? graphene::cli::Spacing::Linear
                                : graphene::cli::Spacing::Log;
  }
  if (app.count("--out") > 0) cfg.out = f.out;
  if (app.count("--permissive-q") > 0) cfg.permissive_q = f.permissive_q;
  if (app.count("--tolerance") > 0) cfg.tolerance = f.tolerance;
  return cfg;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau-level spectrum and thermodynamics of graphene"};
  app.require_subcommand(1);
  app.fallthrough();

  CommonFlags flags;
  add_common(app, flags);

  auto* sc_spectrum =
      app.add_subcommand("spectrum", "Landau levels for both bands");
  int n_max = 10;
  sc_spectrum->add_option("--nmax", n_max, "highest level index");

  auto* sc_thermo =
      app.add_subcommand("thermo", "canonical thermodynamics sweep");

  auto* sc_superstat =
      app.add_subcommand("superstat", "superstatistical sweep at fixed q");

  auto* sc_boltzmann = app.add_subcommand(
      "boltzmann", "generalized Boltzmann factor tables");
  graphene::cli::BoltzmannOptions bopt;
  sc_boltzmann->add_option("--E", bopt.e_fixed, "energy for the beta section");
  sc_boltzmann->add_option("--beta", bopt.beta_fixed,
                           "beta for the energy section");
  sc_boltzmann->add_option("--emax", bopt.e_max, "top of the energy scan");
  sc_boltzmann->add_option("--ecount", bopt.e_count, "energy scan points");
  sc_boltzmann->add_option("--qlist", bopt.q_list, "q values to tabulate")
      ->delimiter(',');
  sc_boltzmann->add_flag("--split", bopt.split,
                         "write the two sections to separate files");

  auto* sc_eigencheck = app.add_subcommand(
      "eigencheck", "finite-difference check of the level formula");
  double k1 = 0.0;
  int n_levels = 6;
  sc_eigencheck->add_option("--k1", k1, "transverse wavenumber");
  sc_eigencheck->add_option("--levels", n_levels, "number of levels to check");

  auto* sc_figdata = app.add_subcommand(
      "figdata", "write the full set of figure CSV files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return graphene::cli::kExitValidation;
  }

  try {
    const RunConfig cfg = resolve(app, flags);
    if (sc_spectrum->parsed()) return graphene::cli::cmd_spectrum(cfg, n_max);
    if (sc_thermo->parsed()) return graphene::cli::cmd_thermo(cfg);
    if (sc_superstat->parsed()) return graphene::cli::cmd_superstat(cfg);
    if (sc_boltzmann->parsed()) return graphene::cli::cmd_boltzmann(cfg, bopt);
    if (sc_eigencheck->parsed()) {
      return graphene::cli::cmd_eigencheck(cfg, k1, n_levels, std::cout);
    }
    if (sc_figdata->parsed()) return graphene::cli::cmd_figdata(cfg);
  } catch (const graphene::cli::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return graphene::cli::kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return graphene::cli::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return graphene::cli::kExitComputation;
  }
  return graphene::cli::kExitValidation;
}
