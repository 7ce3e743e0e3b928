#include "graphene/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <ostream>
#include <sstream>

#include "graphene/canonical.hpp"
#include "graphene/cli/csv.hpp"
#include "graphene/eigencheck.hpp"
#include "graphene/numerics/quadrature.hpp"
#include "graphene/spectrum.hpp"
#include "graphene/superstat.hpp"

namespace graphene::cli {

namespace {

int guard(const std::function<int()>& body) {
  try {
    return body();
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const numerics::QuadratureBudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

// "-" or empty selects stdout; anything else opens a fresh binary file so
// line endings stay LF everywhere.
struct Output {
  std::ofstream file;
  std::ostream* os = nullptr;
};

Output open_output(const std::string& path) {
  Output o;
  if (path.empty() || path == "-") {
    o.os = &std::cout;
    return o;
  }
  o.file.open(path, std::ios::binary | std::ios::trunc);
  if (!o.file) throw IoError("cannot open output file: " + path);
  o.os = &o.file;
  return o;
}

void finish_output(Output& o, const std::string& path) {
  o.os->flush();
  if (o.os->fail()) throw IoError("write failed: " + (path.empty() ? "<stdout>" : path));
}

void config_header(CsvWriter& csv, const RunConfig& cfg) {
  csv.comment("run configuration:");
  csv.comment(serialize(cfg));
}

void check_finite(double v, const char* what, double beta) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "non-finite " << what << " at beta = " << beta;
    throw std::runtime_error(msg.str());
  }
}

void warn_lambda(const RunConfig& cfg) {
  if (cfg.lambda_max != 1.0) {
    std::cerr << "warning: the closed-form generalized partition function "
                 "assumes lambda_max = 1 (a^2 = 2 b); with lambda_max = "
              << cfg.lambda_max
              << " it differs from the level integral by that factor\n";
  }
}

std::string split_name(const std::string& base, const std::string& tag) {
  const std::string ext = ".csv";
  if (base.size() > ext.size() &&
      base.compare(base.size() - ext.size(), ext.size(), ext) == 0) {
    return base.substr(0, base.size() - ext.size()) + "_" + tag + ext;
  }
  return base + "_" + tag + ext;
}

double db_dbeta(double energy, double beta, double q) {
  const double be = beta * energy;
  return std::exp(-be) * energy * (q * be - 1.0 - 0.5 * q * be * be);
}

void write_boltzmann_beta_section(CsvWriter& csv, const RunConfig& cfg,
                                  const BoltzmannOptions& opt) {
  csv.comment("section = beta_scan: B vs beta at fixed E = " +
              format_sig17(opt.e_fixed) + " (db_dbeta tabulated alongside)");
  std::vector<std::string> names = {"beta"};
  for (const double q : opt.q_list) {
    std::ostringstream qs;
    qs << "q" << q;
    names.push_back("b_" + qs.str());
    names.push_back("db_dbeta_" + qs.str());
  }
  csv.header(names);
  for (const double beta : make_beta_grid(cfg.beta_grid)) {
    std::vector<double> cells = {beta};
    for (const double q : opt.q_list) {
      cells.push_back(superstat::boltzmann_factor_q(opt.e_fixed, beta, q));
      cells.push_back(db_dbeta(opt.e_fixed, beta, q));
    }
    csv.row(cells);
  }
}

void write_boltzmann_energy_section(CsvWriter& csv,
                                    const BoltzmannOptions& opt) {
  csv.comment("section = energy_scan: B vs E at fixed beta = " +
              format_sig17(opt.beta_fixed));
  std::vector<std::string> names = {"e"};
  for (const double q : opt.q_list) {
    std::ostringstream qs;
    qs << "q" << q;
    names.push_back("b_" + qs.str());
  }
  csv.header(names);
  for (int i = 0; i < opt.e_count; ++i) {
    const double e = opt.e_max * i / (opt.e_count - 1);
    std::vector<double> cells = {e};
    for (const double q : opt.q_list) {
      cells.push_back(superstat::boltzmann_factor_q(e, opt.beta_fixed, q));
    }
    csv.row(cells);
  }
}

}  // namespace

int cmd_spectrum(const RunConfig& cfg, int n_max) {
  return guard([&]() {
    if (n_max < 0 || n_max > 100000) {
      throw std::invalid_argument("nmax must be in [0, 100000]");
    }
    const PhysicalParams phys = cfg.physical();
    const DerivedParams dp = derive_params(phys, cfg.lambda_max);
    Output out = open_output(cfg.out);
    CsvWriter csv(*out.os);
    config_header(csv, cfg);
    csv.header({"n", "e_electron", "e_hole"});
    for (int n = 0; n <= n_max; ++n) {
      csv.row_cells({std::to_string(n),
                     format_sig17(landau_energy(n, Band::Electron, dp, phys)),
                     format_sig17(landau_energy(n, Band::Hole, dp, phys))});
    }
    finish_output(out, cfg.out);
    return kExitOk;
  });
}

int cmd_thermo(const RunConfig& cfg) {
  return guard([&]() {
    const PhysicalParams phys = cfg.physical();
    const DerivedParams dp = derive_params(phys, cfg.lambda_max);
    const std::vector<double> betas = make_beta_grid(cfg.beta_grid);
    const auto points = canonical::thermo_sweep(betas, dp, phys.k_boltz);
    Output out = open_output(cfg.out);
    CsvWriter csv(*out.os);
    config_header(csv, cfg);
    csv.header({"beta", "z", "u", "c", "s", "f"});
    for (const auto& p : points) {
      check_finite(p.z, "partition function", p.beta);
      check_finite(p.u, "mean energy", p.beta);
      check_finite(p.c, "heat capacity", p.beta);
      check_finite(p.s, "entropy", p.beta);
      check_finite(p.f, "free energy", p.beta);
      // Legendre consistency of every emitted row
      const double rhs = p.u - p.s / (phys.k_boltz * p.beta);
      const double scale = std::max({std::abs(p.f), std::abs(p.u),
                                     std::abs(p.s / (phys.k_boltz * p.beta))});
      if (std::abs(p.f - rhs) > 1e-9 * std::max(scale, 1e-300)) {
        std::ostringstream msg;
        msg << "thermodynamic identity f = u - s/(k beta) violated at beta = "
            << p.beta;
        throw std::runtime_error(msg.str());
      }
      csv.row({p.beta, p.z, p.u, p.c, p.s, p.f});
    }
    finish_output(out, cfg.out);
    return kExitOk;
  });
}

int cmd_superstat(const RunConfig& cfg) {
  return guard([&]() {
    superstat::validate({cfg.q, cfg.permissive_q});
    const PhysicalParams phys = cfg.physical();
    const DerivedParams dp = derive_params(phys, cfg.lambda_max);
    warn_lambda(cfg);
    const std::vector<double> betas = make_beta_grid(cfg.beta_grid);
    const auto points = superstat::superstat_sweep(betas, cfg.q, dp, phys.k_boltz);
    Output out = open_output(cfg.out);
    CsvWriter csv(*out.os);
    config_header(csv, cfg);
    csv.header({"beta", "q", "z_s", "u_s", "c_s", "s_s", "f_s"});
    for (const auto& p : points) {
      check_finite(p.z_s, "partition function", p.beta);
      check_finite(p.s_s, "entropy", p.beta);
      check_finite(p.f_s, "free energy", p.beta);
      const double rhs = p.u_s - p.s_s / (phys.k_boltz * p.beta);
      const double scale = std::max({std::abs(p.f_s), std::abs(p.u_s),
                                     std::abs(p.s_s / (phys.k_boltz * p.beta))});
      if (std::abs(p.f_s - rhs) > 1e-12 * std::max(scale, 1e-300)) {
        std::ostringstream msg;
        msg << "identity f_s = u_s - s_s/(k beta) violated at beta = " << p.beta;
        throw std::runtime_error(msg.str());
      }
      csv.row({p.beta, p.q, p.z_s, p.u_s, p.c_s, p.s_s, p.f_s});
    }
    finish_output(out, cfg.out);
    return kExitOk;
  });
}

int cmd_boltzmann(const RunConfig& cfg, const BoltzmannOptions& opt) {
  return guard([&]() {
    if (opt.q_list.empty()) throw std::invalid_argument("q list is empty");
    for (const double q : opt.q_list) {
      superstat::validate({q, cfg.permissive_q});
    }
    if (!(opt.e_fixed >= 0.0) || !std::isfinite(opt.e_fixed)) {
      throw std::invalid_argument("e_fixed must be >= 0");
    }
    if (!(opt.beta_fixed > 0.0) || !std::isfinite(opt.beta_fixed)) {
      throw std::invalid_argument("beta_fixed must be positive");
    }
    if (!(opt.e_max > 0.0) || !std::isfinite(opt.e_max)) {
      throw std::invalid_argument("e_max must be positive");
    }
    if (opt.e_count < 2) throw std::invalid_argument("e_count must be >= 2");

    if (opt.split && !cfg.out.empty() && cfg.out != "-") {
      const std::string beta_path = split_name(cfg.out, "beta");
      Output out1 = open_output(beta_path);
      CsvWriter csv1(*out1.os);
      config_header(csv1, cfg);
      write_boltzmann_beta_section(csv1, cfg, opt);
      finish_output(out1, beta_path);

      const std::string energy_path = split_name(cfg.out, "energy");
      Output out2 = open_output(energy_path);
      CsvWriter csv2(*out2.os);
      config_header(csv2, cfg);
      write_boltzmann_energy_section(csv2, opt);
      finish_output(out2, energy_path);
      return kExitOk;
    }

    Output out = open_output(cfg.out);
    CsvWriter csv(*out.os);
    config_header(csv, cfg);
    write_boltzmann_beta_section(csv, cfg, opt);
    write_boltzmann_energy_section(csv, opt);
    finish_output(out, cfg.out);
    return kExitOk;
  });
}

int cmd_eigencheck(const RunConfig& cfg, double k1, int n_levels,
                   std::ostream& report) {
  return guard([&]() {
    if (!std::isfinite(k1)) throw std::invalid_argument("k1 must be finite");
    if (!(cfg.tolerance > 0.0)) {
      throw std::invalid_argument("tolerance must be positive");
    }
    const PhysicalParams phys = cfg.physical();
    const DerivedParams dp = derive_params(phys, cfg.lambda_max);
    const eigencheck::GridSpec grid = eigencheck::reference_grid(dp, k1);
    const auto rep = eigencheck::verify_spectrum(dp, k1, grid, n_levels);
    const auto levels =
        eigencheck::dirac_levels_from_oracle(rep, phys, cfg.tolerance);

    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "eigencheck: D = %.6g, k1 = %.6g, window [%.6g, %.6g], %d points",
                  dp.d, k1, grid.x_min, grid.x_max, grid.n_points);
    report << buf << "\n";
    report << "  n      computed        analytic       deviation\n";
    for (std::size_t i = 0; i < rep.computed.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%3zu  %14.6e  %14.6e  %14.6e", i,
                    rep.computed[i], rep.analytic[i], rep.deviation[i]);
      report << buf << "\n";
    }
    std::snprintf(buf, sizeof buf,
                  "max |deviation| = %.6e  (threshold %.6e)",
                  rep.max_abs_deviation, cfg.tolerance);
    report << buf << "\n";
    const bool pass = rep.max_abs_deviation <= cfg.tolerance;
    report << "result: " << (pass ? "PASS" : "FAIL") << "\n";

    if (!cfg.out.empty() && cfg.out != "-") {
      Output out = open_output(cfg.out);
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"n", "computed", "analytic", "deviation", "e_electron"});
      for (std::size_t i = 0; i < rep.computed.size(); ++i) {
        // electron entries sit at even indices of the level list
        csv.row_cells({std::to_string(i), format_sig17(rep.computed[i]),
                       format_sig17(rep.analytic[i]),
                       format_sig17(rep.deviation[i]),
                       format_sig17(levels[2 * i].energy)});
      }
      finish_output(out, cfg.out);
    }
    return pass ? kExitOk : kExitEigen;
  });
}

int cmd_figdata(const RunConfig& cfg) {
  return guard([&]() {
    superstat::validate({cfg.q, cfg.permissive_q});
    const PhysicalParams phys = cfg.physical();
    const DerivedParams dp = derive_params(phys, cfg.lambda_max);
    warn_lambda(cfg);

    const std::string dir =
        (cfg.out.empty() || cfg.out == "-") ? "figdata" : cfg.out;
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError("cannot create output directory: " + dir);

    const std::vector<double> betas = make_beta_grid(cfg.beta_grid);
    const auto thermo = canonical::thermo_sweep(betas, dp, phys.k_boltz);
    const auto super = superstat::superstat_sweep(betas, cfg.q, dp, phys.k_boltz);
    const std::vector<double> q_family = {0.0, 0.25, 0.5, 0.75, 1.0};

    auto open_fig = [&](const std::string& name) {
      const std::string path = dir + "/" + name;
      Output out = open_output(path);
      return out;
    };

    {
      Output out = open_fig("fig1_spectrum.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"n", "e_electron", "e_hole"});
      for (int n = 0; n <= 10; ++n) {
        csv.row_cells({std::to_string(n),
                       format_sig17(landau_energy(n, Band::Electron, dp, phys)),
                       format_sig17(landau_energy(n, Band::Hole, dp, phys))});
      }
      finish_output(out, dir + "/fig1_spectrum.csv");
    }
    {
      const double e1 = landau_energy(1, Band::Electron, dp, phys);
      Output out = open_fig("fig1_boltzmann.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.comment("generalized Boltzmann factor at fixed E = " + format_sig17(e1));
      std::vector<std::string> names = {"beta"};
      for (const double q : q_family) {
        std::ostringstream qs;
        qs << "b_q" << q;
        names.push_back(qs.str());
      }
      csv.header(names);
      for (const double beta : betas) {
        std::vector<double> cells = {beta};
        for (const double q : q_family) {
          cells.push_back(superstat::boltzmann_factor_q(e1, beta, q));
        }
        csv.row(cells);
      }
      finish_output(out, dir + "/fig1_boltzmann.csv");
    }
    {
      Output out = open_fig("fig2_partition.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"beta", "z", "z_s"});
      for (std::size_t i = 0; i < thermo.size(); ++i) {
        csv.row({thermo[i].beta, thermo[i].z, super[i].z_s});
      }
      finish_output(out, dir + "/fig2_partition.csv");
    }
    {
      Output out = open_fig("fig3_energy.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"beta", "u", "u_s"});
      for (std::size_t i = 0; i < thermo.size(); ++i) {
        csv.row({thermo[i].beta, thermo[i].u, super[i].u_s});
      }
      finish_output(out, dir + "/fig3_energy.csv");
    }
    {
      Output out = open_fig("fig4_heat.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"beta", "c", "c_s"});
      for (std::size_t i = 0; i < thermo.size(); ++i) {
        csv.row({thermo[i].beta, thermo[i].c, super[i].c_s});
      }
      finish_output(out, dir + "/fig4_heat.csv");
    }
    {
      Output out = open_fig("fig5_entropy.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      std::vector<std::string> names = {"beta", "s"};
      for (const double q : q_family) {
        std::ostringstream qs;
        qs << "s_s_q" << q;
        names.push_back(qs.str());
      }
      csv.header(names);
      for (std::size_t i = 0; i < thermo.size(); ++i) {
        std::vector<double> cells = {thermo[i].beta, thermo[i].s};
        for (const double q : q_family) {
          cells.push_back(
              superstat::entropy_s(thermo[i].beta, q, dp, phys.k_boltz));
        }
        csv.row(cells);
      }
      finish_output(out, dir + "/fig5_entropy.csv");
    }
    {
      Output out = open_fig("fig6_free.csv");
      CsvWriter csv(*out.os);
      config_header(csv, cfg);
      csv.header({"beta", "f", "f_s"});
      for (std::size_t i = 0; i < thermo.size(); ++i) {
        csv.row({thermo[i].beta, thermo[i].f, super[i].f_s});
      }
      finish_output(out, dir + "/fig6_free.csv");
    }
    return kExitOk;
  });
}

}  // namespace graphene::cli
