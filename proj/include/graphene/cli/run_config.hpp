#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "graphene/params.hpp"

namespace graphene::cli {

// File-system or stream failures, mapped to their own exit code.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Spacing { Log, Linear };

struct BetaGrid {
  double min = 0.01;
  double max = 100.0;
  int count = 100;
  Spacing spacing = Spacing::Log;
};

// Grid with exact endpoints; count = 1 collapses to {min}.
std::vector<double> make_beta_grid(const BetaGrid& g);

struct RunConfig {
  Units units = Units::Natural;
  double field = 1.0;       // D in Natural mode, B0 in tesla in SI mode
  double lambda_max = 1.0;
  double q = 0.5;
  double k_boltz = 1.0;     // Natural mode only; SI uses the CODATA value
  BetaGrid beta_grid;
  std::string out;          // file (directory for figdata); "" or "-" = stdout
  bool permissive_q = false;
  double tolerance = 1e-3;  // eigencheck pass threshold

  PhysicalParams physical() const;
  DerivedParams derived() const;
};

// Flat "key = value" config text (TOML-compatible subset: '#' comments,
// optional double quotes around strings).  serialize() followed by
// parse_config() is the identity; unknown or duplicate keys are rejected.
RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::string& path);
std::string serialize(const RunConfig& cfg);

}  // namespace graphene::cli
