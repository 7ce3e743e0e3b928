// Acceptance gate: ten end-to-end criteria, one verdict line each, exit code
// equal to the number of failures.  Tolerances are fixed here and the
// measured numbers are printed so a drift is visible in the log.
#include <algorithm>
#include <cfloat>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "graphene/canonical.hpp"
#include "graphene/cli/commands.hpp"
#include "graphene/cli/run_config.hpp"
#include "graphene/eigencheck.hpp"
#include "graphene/numerics/derivative.hpp"
#include "graphene/numerics/quadrature.hpp"
#include "graphene/params.hpp"
#include "graphene/spectrum.hpp"
#include "graphene/superstat.hpp"
#include "graphene/wavefunction.hpp"

using namespace graphene;

namespace {

int failures = 0;

void verdict(int idx, const char* name, bool ok, const std::string& detail) {
  std::printf("[%s] %2d %-46s %s\n", ok ? "PASS" : "FAIL", idx, name,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0,
                double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double rel(double x, double y) {
  const double scale = std::max({std::abs(x), std::abs(y), 1e-300});
  return std::abs(x - y) / scale;
}

std::vector<double> log_grid(double lo, double hi, int n) {
  return cli::make_beta_grid({lo, hi, n, cli::Spacing::Log});
}

DerivedParams ref_params() {  // a = 1, b = 1/2
  return derive_params(PhysicalParams::natural(0.5), 1.0);
}

const double kEps = DBL_EPSILON;

// ---------------------------------------------------------------- 1
void c1_partition_vs_quadrature() {
  const auto dp = ref_params();
  double worst = 0.0;
  for (double beta : {1e-3, 1e-2, 0.1, 1.0, 10.0, 100.0}) {
    const auto q = canonical::partition_integral(beta, dp, 1e-12);
    worst = std::max(worst, rel(q.value, canonical::partition_closed(beta, dp)));
  }
  verdict(1, "partition function: closed vs quadrature", worst <= 1e-9,
          fmt("max rel dev %.3e (tol 1e-09)", worst));
}

// ---------------------------------------------------------------- 2
void c2_thermo_vs_differentiation() {
  const auto dp = ref_params();
  auto lnz = [&](double beta) {
    return std::log(canonical::partition_closed(beta, dp));
  };
  double worst_u = 0.0;
  double worst_c = 0.0;
  double worst_s = 0.0;
  double worst_f = 0.0;
  for (double beta : log_grid(0.01, 100.0, 50)) {
    const double h1 = beta * std::cbrt(kEps);
    const double u_num = -numerics::derivative(lnz, beta, 1, h1);
    worst_u = std::max(worst_u, rel(u_num, canonical::mean_energy(beta, dp)));

    // the curvature of ln Z lives on the scale 1/a, not beta, so the step
    // for the second derivative keeps a 1/a floor
    const double h2 = std::pow(kEps, 0.25) * (beta + 1.0 / dp.a);
    const double c_num =
        beta * beta * numerics::derivative(lnz, beta, 2, h2);
    worst_c = std::max(worst_c, rel(c_num, canonical::heat_capacity(beta, dp)));

    const double s_num = lnz(beta) + beta * u_num;
    const double s_lib = canonical::entropy(beta, dp);
    worst_s = std::max(worst_s, std::abs(s_num - s_lib) /
                                    std::max(1.0, std::abs(s_lib)));

    const double f_num =
        -std::log(canonical::partition_integral(beta, dp, 1e-12).value) / beta;
    worst_f = std::max(worst_f, rel(f_num, canonical::free_energy(beta, dp)));
  }
  verdict(2, "U, C, S, F vs numerical differentiation",
          worst_u <= 1e-6 && worst_c <= 1e-5 && worst_s <= 1e-6 &&
              worst_f <= 1e-9,
          fmt("U %.2e C %.2e ", worst_u, worst_c) +
              fmt("S %.2e F %.2e (tol 1e-06/1e-05/1e-06/1e-09)", worst_s,
                  worst_f));
}

// ---------------------------------------------------------------- 3
void c3_limits() {
  const auto dp = ref_params();
  const double z0 = canonical::partition_closed(1e-6 / dp.a, dp);
  const double dev_z = std::abs(z0 - dp.lambda_max);

  const auto dp3 = derive_params(PhysicalParams::natural(4.5), 1.0);  // a = 3
  const double u0 = canonical::mean_energy(1e-6 / dp3.a, dp3);
  const double dev_u = rel(u0, 2.0 * dp3.a / 3.0);

  const double c_inf = canonical::heat_capacity(50.0 / dp.a, dp);
  const double dev_c = std::abs(c_inf - 2.0);

  const double c_zero = canonical::heat_capacity(1e-3 / dp.a, dp);

  verdict(3, "limits: Z->lambda, U->2a/3, C->{2k, 0}",
          dev_z <= 1e-6 && dev_u <= 1e-5 && dev_c <= 1e-8 && c_zero <= 1e-6,
          fmt("|Z-lam| %.1e |U/(2a/3)-1| %.1e ", dev_z, dev_u) +
              fmt("|C-2k| %.1e C(t=1e-3) %.1e", dev_c, c_zero));
}

// ---------------------------------------------------------------- 4
void c4_legendre_identity() {
  const auto dp = ref_params();
  double worst_can = 0.0;
  for (double beta : log_grid(1e-3, 1e3, 40)) {
    const double f = canonical::free_energy(beta, dp);
    const double u = canonical::mean_energy(beta, dp);
    const double soq = canonical::entropy(beta, dp) / beta;
    const double scale = std::max({std::abs(f), std::abs(u), std::abs(soq)});
    worst_can = std::max(worst_can, std::abs(f - (u - soq)) / scale);
  }
  double worst_sup = 0.0;
  for (double beta : log_grid(1e-3, 1e3, 40)) {
    const double f = superstat::free_energy_s(beta, 0.5, dp);
    const double u = superstat::mean_energy_s(beta, 0.5);
    const double soq = superstat::entropy_s(beta, 0.5, dp) / beta;
    const double scale = std::max({std::abs(f), std::abs(u), std::abs(soq)});
    worst_sup = std::max(worst_sup, std::abs(f - (u - soq)) / scale);
  }
  verdict(4, "Legendre identity F = U - S/(k beta)",
          worst_can <= 1e-9 && worst_sup <= 1e-12,
          fmt("canonical %.2e (tol 1e-09), generalized %.2e (tol 1e-12)",
              worst_can, worst_sup));
}

// ---------------------------------------------------------------- 5
void c5_superstat_structure() {
  const auto dp = ref_params();
  bool c_exact = true;
  for (double q : {0.0, 0.3, 0.5, 1.0}) {
    c_exact = c_exact && (superstat::heat_capacity_s(q) == 2.0) &&
              (superstat::heat_capacity_s(q, 3.0) == 6.0);
  }
  double worst_u = 0.0;
  double zs_min = DBL_MAX;
  double zs_max = -DBL_MAX;
  for (double beta : log_grid(0.01, 100.0, 100)) {
    worst_u = std::max(
        worst_u, std::abs(superstat::mean_energy_s(beta, 0.5) * beta - 2.0));
    const double zs2 =
        superstat::partition_super_closed(beta, 0.5, dp) * beta * beta;
    zs_min = std::min(zs_min, zs2);
    zs_max = std::max(zs_max, zs2);
  }
  const double zs_spread = (zs_max - zs_min) / zs_max;
  bool q0_exact = true;
  for (double e : {0.0, 0.7, 3.0, 25.0}) {
    for (double beta : {0.02, 1.0, 9.0}) {
      q0_exact = q0_exact &&
                 (superstat::boltzmann_factor_q(e, beta, 0.0) ==
                  std::exp(-beta * e));
    }
  }
  verdict(5, "generalized-ensemble exact structure",
          c_exact && worst_u <= 2.0 * kEps * 2.0 && zs_spread <= 8.0 * kEps &&
              q0_exact,
          fmt("|u beta - 2| %.1e Zs beta^2 spread %.1e ", worst_u, zs_spread) +
              (c_exact ? "C_s == 2k exact, " : "C_s MISMATCH, ") +
              (q0_exact ? "q=0 factor exact" : "q=0 factor MISMATCH"));
}

// ---------------------------------------------------------------- 6
void c6_superstat_integral() {
  const auto dp = ref_params();
  double worst = 0.0;
  for (double q : {0.0, 0.5, 1.0}) {
    for (double beta : {0.5, 1.0, 2.0}) {
      const auto r = superstat::partition_super_integral(beta, q, dp, 1e-11);
      const double expect = (1.0 + 3.0 * q) / (dp.b * beta * beta);
      worst = std::max(worst, rel(r.value, expect));
    }
  }
  // cutoff demonstration: at lambda_max = 2 the closed form differs from
  // the integral by exactly that factor
  const auto dp2 = derive_params(PhysicalParams::natural(0.5), 2.0);
  const auto r2 = superstat::partition_super_integral(1.0, 0.5, dp2, 1e-11);
  const double factor_dev =
      rel(2.0 * superstat::partition_super_closed(1.0, 0.5, dp2), r2.value);
  verdict(6, "generalized partition: integral cross-check",
          worst <= 1e-9 && factor_dev <= 1e-9,
          fmt("max rel dev %.2e lambda-factor dev %.2e (tol 1e-09)", worst,
              factor_dev));
}

// ---------------------------------------------------------------- 7
void c7_grid_eigensolver() {
  const auto dp = ref_params();
  const auto coarse =
      eigencheck::verify_spectrum(dp, 0.0, eigencheck::reference_grid(dp, 0.0), 6);
  eigencheck::GridSpec fine = eigencheck::reference_grid(dp, 0.0);
  fine.n_points = 4001;
  const auto refined = eigencheck::verify_spectrum(dp, 0.0, fine, 6);
  const double ratio = coarse.max_abs_deviation / refined.max_abs_deviation;
  const auto shifted =
      eigencheck::verify_spectrum(dp, 3.0, eigencheck::reference_grid(dp, 3.0), 6);
  double k1_dev = 0.0;
  for (int i = 0; i < 6; ++i) {
    k1_dev = std::max(k1_dev,
                      std::abs(coarse.computed[i] - shifted.computed[i]));
  }
  verdict(7, "finite-difference eigensolver vs 2nD",
          coarse.max_abs_deviation <= 1e-3 &&
              refined.max_abs_deviation <= 2.5e-4 && ratio >= 3.2 &&
              ratio <= 4.8 && k1_dev <= 2e-3,
          fmt("dev %.3e refined %.3e ", coarse.max_abs_deviation,
              refined.max_abs_deviation) +
              fmt("ratio %.3f k1-shift %.1e", ratio, k1_dev));
}

// ------------------------------------------------------------- CSV helpers
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Table read_table(const std::filesystem::path& p) {
  Table t;
  std::ifstream in(p);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (t.header.empty()) {
      t.header = cells;
      continue;
    }
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(std::stod(c));
    t.rows.push_back(row);
  }
  return t;
}

int column(const Table& t, const std::string& name) {
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    if (t.header[i] == name) return static_cast<int>(i);
  }
  return -1;
}

bool strictly_decreasing(const Table& t, int col) {
  for (std::size_t i = 1; i < t.rows.size(); ++i) {
    if (!(t.rows[i][col] < t.rows[i - 1][col])) return false;
  }
  return true;
}

std::filesystem::path fig_dir() {
  return std::filesystem::temp_directory_path() / "glandau_acceptance_fig";
}

cli::RunConfig fig_config() {
  cli::RunConfig cfg;
  cfg.field = 0.5;  // a = 1, b = 1/2
  cfg.out = fig_dir().string();
  return cfg;
}

// ---------------------------------------------------------------- 8
void c8_figure_shapes() {
  const auto dir = fig_dir();
  std::filesystem::remove_all(dir);
  if (cli::cmd_figdata(fig_config()) != cli::kExitOk) {
    verdict(8, "figure data: physical shape checks", false,
            "figdata command failed");
    return;
  }

  bool ok = true;
  std::string note;

  const Table spec = read_table(dir / "fig1_spectrum.csv");
  const double e1 = spec.rows[1][1];
  double sqrt_dev = 0.0;
  for (const auto& row : spec.rows) {
    sqrt_dev = std::max(
        sqrt_dev, std::abs(row[1] - e1 * std::sqrt(row[0])));
    if (row[2] != -row[1]) ok = false;
  }
  if (sqrt_dev > 1e-12) {
    ok = false;
    note += "sqrt(n) law broken; ";
  }

  const Table part = read_table(dir / "fig2_partition.csv");
  if (!strictly_decreasing(part, column(part, "z")) ||
      !strictly_decreasing(part, column(part, "z_s"))) {
    ok = false;
    note += "Z not decreasing; ";
  }

  const Table energy = read_table(dir / "fig3_energy.csv");
  if (!strictly_decreasing(energy, column(energy, "u")) ||
      !strictly_decreasing(energy, column(energy, "u_s"))) {
    ok = false;
    note += "U not decreasing; ";
  }

  const Table heat = read_table(dir / "fig4_heat.csv");
  const int ccol = column(heat, "c");
  double c_top = 0.0;
  bool c_monotone = true;
  for (std::size_t i = 0; i < heat.rows.size(); ++i) {
    c_top = heat.rows[i][ccol];
    if (i > 0 && heat.rows[i][ccol] < heat.rows[i - 1][ccol] - 1e-12) {
      c_monotone = false;
    }
  }
  if (!c_monotone || std::abs(c_top - 2.0) > 1e-6) {
    ok = false;
    note += fmt("C saturation off (last %.3e); ", c_top);
  }

  const Table ent = read_table(dir / "fig5_entropy.csv");
  if (!strictly_decreasing(ent, column(ent, "s"))) {
    ok = false;
    note += "S not decreasing; ";
  }
  const int q_cols[5] = {column(ent, "s_s_q0"), column(ent, "s_s_q0.25"),
                         column(ent, "s_s_q0.5"), column(ent, "s_s_q0.75"),
                         column(ent, "s_s_q1")};
  for (const auto& row : ent.rows) {
    for (int j = 1; j < 5; ++j) {
      if (!(row[q_cols[j]] > row[q_cols[j - 1]])) {
        ok = false;
        note += "S_s not increasing in q; ";
        break;
      }
    }
    if (!ok) break;
  }

  const Table free_t = read_table(dir / "fig6_free.csv");
  if (!strictly_decreasing(free_t, column(free_t, "f"))) {
    ok = false;
    note += "F not decreasing; ";
  }
  const int fcol = column(free_t, "f_s");
  const double beta_star = std::sqrt(2.0 + 6.0 * 0.5);  // q = 0.5, a = 1
  int transitions = 0;
  for (std::size_t i = 1; i < free_t.rows.size(); ++i) {
    const bool was_neg = free_t.rows[i - 1][fcol] < 0.0;
    const bool is_pos = free_t.rows[i][fcol] > 0.0;
    if (was_neg && is_pos) {
      ++transitions;
      if (!(free_t.rows[i - 1][0] < beta_star &&
            free_t.rows[i][0] > beta_star)) {
        ok = false;
        note += "F_s crossing off the predicted beta*; ";
      }
    }
  }
  if (transitions != 1 || free_t.rows.front()[fcol] >= 0.0 ||
      free_t.rows.back()[fcol] <= 0.0 ||
      free_t.rows.back()[fcol] > 0.1) {
    ok = false;
    note += "F_s sign pattern wrong; ";
  }

  verdict(8, "figure data: physical shape checks", ok,
          ok ? fmt("sqrt-law dev %.1e, crossing brackets beta* %.3f",
                   sqrt_dev, beta_star)
             : note);
}

// ---------------------------------------------------------------- 9
void c9_orthogonality() {
  const auto dp = ref_params();
  const double pi = 3.14159265358979323846;

  // Hermite orthogonality under the Gaussian weight
  double worst_h = 0.0;
  std::vector<double> hnorm(11);
  double fact = 1.0;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) fact *= n;
    hnorm[n] = std::pow(2.0, n) * fact * std::sqrt(pi);
  }
  for (int m = 0; m <= 10; ++m) {
    for (int n = m + 1; n <= 10; ++n) {
      const auto r = numerics::integrate(
          [m, n](double z) {
            return hermite(m, z) * hermite(n, z) * std::exp(-z * z);
          },
          -13.0, 13.0, 1e-10);
      worst_h = std::max(worst_h,
                         std::abs(r.value) / std::sqrt(hnorm[m] * hnorm[n]));
    }
  }

  // oscillator-state orthonormality in x
  double worst_psi = 0.0;
  std::vector<double> cn(9);
  for (int n = 0; n <= 8; ++n) cn[n] = wavefunction_norm_constant(n, dp);
  const double lx = 18.0 / std::sqrt(dp.d);
  for (int m = 0; m <= 8; ++m) {
    for (int n = m; n <= 8; ++n) {
      const auto r = numerics::integrate(
          [&](double x) {
            return cn[m] * wavefunction(m, x, 0.0, dp, Normalization::Raw) *
                   cn[n] * wavefunction(n, x, 0.0, dp, Normalization::Raw);
          },
          -lx, lx, 1e-10);
      const double expect = (m == n) ? 1.0 : 0.0;
      worst_psi = std::max(worst_psi, std::abs(r.value - expect));
    }
  }

  // node counts
  bool nodes_ok = true;
  for (int n = 0; n <= 5; ++n) {
    int changes = 0;
    double prev = wavefunction(n, -12.0, 0.0, dp, Normalization::Raw);
    for (double x = -12.0 + 1e-3; x <= 12.0; x += 1e-3) {
      const double cur = wavefunction(n, x, 0.0, dp, Normalization::Raw);
      if (prev != 0.0 && cur != 0.0 &&
          std::signbit(prev) != std::signbit(cur)) {
        ++changes;
      }
      if (cur != 0.0) prev = cur;
    }
    nodes_ok = nodes_ok && (changes == n);
  }

  verdict(9, "Hermite/oscillator orthogonality and nodes",
          worst_h <= 1e-8 && worst_psi <= 1e-6 && nodes_ok,
          fmt("Hermite %.2e (tol 1e-08) psi %.2e (tol 1e-06) ", worst_h,
              worst_psi) +
              (nodes_ok ? "nodes 0..5 exact" : "node counts WRONG"));
}

// ---------------------------------------------------------------- 10
void c10_figdata_determinism() {
  const auto dir = fig_dir();
  const std::vector<std::string> names = {
      "fig1_spectrum.csv", "fig1_boltzmann.csv", "fig2_partition.csv",
      "fig3_energy.csv",   "fig4_heat.csv",      "fig5_entropy.csv",
      "fig6_free.csv"};

  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };

  std::filesystem::remove_all(dir);
  bool ok = cli::cmd_figdata(fig_config()) == cli::kExitOk;
  std::map<std::string, std::string> first;
  for (const auto& n : names) first[n] = slurp(dir / n);
  ok = ok && cli::cmd_figdata(fig_config()) == cli::kExitOk;
  bool identical = true;
  for (const auto& n : names) {
    identical = identical && !first[n].empty() && slurp(dir / n) == first[n];
  }

  // every data cell carries 17 significant digits; the level index in the
  // spectrum table is a bare integer
  const std::regex sig17(R"(-?\d\.\d{16}e[+-]\d{2,3})");
  const std::regex integer(R"(\d+)");
  bool formatted = true;
  long cells_checked = 0;
  for (const auto& n : names) {
    std::istringstream in(first[n]);
    std::string line;
    bool seen_header = false;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      if (!seen_header) {
        seen_header = true;
        continue;
      }
      std::stringstream ss(line);
      std::string cell;
      int idx = 0;
      while (std::getline(ss, cell, ',')) {
        const bool int_cell = (n == "fig1_spectrum.csv" && idx == 0);
        if (!std::regex_match(cell, int_cell ? integer : sig17)) {
          formatted = false;
        }
        ++idx;
        ++cells_checked;
      }
    }
  }

  verdict(10, "figure data: byte determinism and format",
          ok && identical && formatted,
          fmt("%.0f cells checked", static_cast<double>(cells_checked)) +
              (identical ? ", reruns byte-identical" : ", rerun DIFFERS") +
              (formatted ? ", all cells 17-digit" : ", format BROKEN"));
}

}  // namespace

int main() {
  std::printf("acceptance gate: 10 criteria\n");
  c1_partition_vs_quadrature();
  c2_thermo_vs_differentiation();
  c3_limits();
  c4_legendre_identity();
  c5_superstat_structure();
  c6_superstat_integral();
  c7_grid_eigensolver();
  c8_figure_shapes();
  c9_orthogonality();
  c10_figdata_determinism();
  std::printf("%d of 10 criteria passed\n", 10 - failures);
  return failures;
}
