#include "graphene/superstat.hpp"

#include <cmath>
#include <stdexcept>

namespace graphene::superstat {

namespace {

void check_beta(double beta) {
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument(
        "nonphysical-temperature: beta must be positive and finite");
  }
}

void check_q(double q) {
  if (!(q >= 0.0) || !std::isfinite(q)) {
    throw std::invalid_argument("q must be finite and >= 0");
  }
}

}  // namespace

void validate(const SuperstatConfig& cfg) {
  check_q(cfg.q);
  if (!cfg.permissive && cfg.q > 1.0) {
    throw std::invalid_argument(
        "q outside [0, 1]; enable permissive mode to allow larger values");
  }
}

double boltzmann_factor_q(double energy, double beta, double q) {
  check_beta(beta);
  check_q(q);
  const double be = beta * energy;
  return std::exp(-be) * (1.0 + 0.5 * q * be * be);
}

double partition_super_closed(double beta, double q, const DerivedParams& dp) {
  check_beta(beta);
  check_q(q);
  return (2.0 + 6.0 * q) / (dp.a * dp.a * beta * beta);
}

numerics::QuadratureResult partition_super_integral(double beta, double q,
                                                    const DerivedParams& dp,
                                                    double rel_tol) {
  check_beta(beta);
  check_q(q);
  const double scale = 1.0 / (dp.b * beta * beta);
  auto res = numerics::integrate_semi_infinite(
      [q](double t) { return t * std::exp(-t) * (1.0 + 0.5 * q * t * t); },
      0.0, rel_tol);
  res.value *= scale;
  res.abs_error_estimate *= scale;
  return res;
}

double mean_energy_s(double beta, double q) {
  check_beta(beta);
  check_q(q);  // U_s does not depend on q; the weight correction integrates out
  return 2.0 / beta;
}

double free_energy_s(double beta, double q, const DerivedParams& dp) {
  return -std::log(partition_super_closed(beta, q, dp)) / beta;
}

double entropy_s(double beta, double q, const DerivedParams& dp,
                 double k_boltz) {
  return k_boltz * (2.0 + std::log(partition_super_closed(beta, q, dp)));
}

double heat_capacity_s(double q, double k_boltz) {
  check_q(q);
  return 2.0 * k_boltz;
}

std::vector<SuperstatPoint> superstat_sweep(std::span<const double> betas,
                                            double q, const DerivedParams& dp,
                                            double k_boltz) {
  if (betas.empty()) throw std::invalid_argument("empty-sweep: no beta values");
  check_q(q);
  std::vector<SuperstatPoint> out;
  out.reserve(betas.size());
  for (const double beta : betas) {
    SuperstatPoint p;
    p.beta = beta;
    p.q = q;
    p.z_s = partition_super_closed(beta, q, dp);
    p.u_s = mean_energy_s(beta, q);
    p.c_s = heat_capacity_s(q, k_boltz);
    p.s_s = entropy_s(beta, q, dp, k_boltz);
    p.f_s = free_energy_s(beta, q, dp);
    out.push_back(p);
  }
  return out;
}

}  // namespace graphene::superstat
