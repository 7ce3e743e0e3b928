#include "graphene/cli/run_config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace graphene::cli {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string unquote(const std::string& s) {
  if (s.size() >= 2 && s.front() == '"' && s.back() == '"') {
    return s.substr(1, s.size() - 2);
  }
  return s;
}

std::string fmt_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_number(const std::string& value, const std::string& key) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config key '" + key + "': not a number: " + value);
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config key '" + key + "': not a number: " + value);
  }
  return v;
}

int parse_int(const std::string& value, const std::string& key) {
  const double v = parse_number(value, key);
  const int i = static_cast<int>(v);
  if (static_cast<double>(i) != v) {
    throw std::invalid_argument("config key '" + key + "': not an integer: " + value);
  }
  return i;
}

bool parse_flag(const std::string& value, const std::string& key) {
  if (value == "true") return true;
  if (value == "false") return false;
  throw std::invalid_argument("config key '" + key + "': expected true or false");
}

}  // namespace

std::vector<double> make_beta_grid(const BetaGrid& g) {
  if (!(g.min > 0.0) || !std::isfinite(g.min) || !std::isfinite(g.max) ||
      !(g.max >= g.min)) {
    throw std::invalid_argument("beta grid must satisfy 0 < min <= max");
  }
  if (g.count < 1) {
    throw std::invalid_argument("beta grid needs at least one point");
  }
  if (g.count == 1) return {g.min};
  std::vector<double> out(static_cast<std::size_t>(g.count));
  if (g.spacing == Spacing::Log) {
    const double span = std::log(g.max / g.min);
    for (int i = 0; i < g.count; ++i) {
      out[static_cast<std::size_t>(i)] = g.min * std::exp(span * i / (g.count - 1));
    }
  } else {
    for (int i = 0; i < g.count; ++i) {
      out[static_cast<std::size_t>(i)] =
          g.min + (g.max - g.min) * i / (g.count - 1);
    }
  }
  out.front() = g.min;
  out.back() = g.max;
  return out;
}

PhysicalParams RunConfig::physical() const {
  if (units == Units::SI) return PhysicalParams::si(field);
  PhysicalParams p = PhysicalParams::natural(field);
  p.k_boltz = k_boltz;
  return p;
}

DerivedParams RunConfig::derived() const {
  return derive_params(physical(), lambda_max);
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::set<std::string> seen;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line is not 'key = value': " + line);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = unquote(trim(line.substr(eq + 1)));
    if (key.empty()) throw std::invalid_argument("config line has empty key");
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate config key: " + key);
    }
    if (key == "units") {
      if (value == "natural") {
        cfg.units = Units::Natural;
      } else if (value == "si") {
        cfg.units = Units::SI;
      } else {
        throw std::invalid_argument("config key 'units': expected natural or si");
      }
    } else if (key == "field") {
      cfg.field = parse_number(value, key);
    } else if (key == "lambda_max") {
      cfg.lambda_max = parse_number(value, key);
    } else if (key == "q") {
      cfg.q = parse_number(value, key);
    } else if (key == "k_boltz") {
      cfg.k_boltz = parse_number(value, key);
    } else if (key == "beta_min") {
      cfg.beta_grid.min = parse_number(value, key);
    } else if (key == "beta_max") {
      cfg.beta_grid.max = parse_number(value, key);
    } else if (key == "beta_count") {
      cfg.beta_grid.count = parse_int(value, key);
    } else if (key == "beta_spacing") {
      if (value == "log") {
        cfg.beta_grid.spacing = Spacing::Log;
      } else if (value == "linear") {
        cfg.beta_grid.spacing = Spacing::Linear;
      } else {
        throw std::invalid_argument(
            "config key 'beta_spacing': expected log or linear");
      }
    } else if (key == "out") {
      cfg.out = value;
    } else if (key == "permissive_q") {
      cfg.permissive_q = parse_flag(value, key);
    } else if (key == "tolerance") {
      cfg.tolerance = parse_number(value, key);
    } else {
      throw std::invalid_argument("unknown config key: " + key);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize(const RunConfig& cfg) {
  std::ostringstream os;
  os << "units = \"" << (cfg.units == Units::SI ? "si" : "natural") << "\"\n";
  os << "field = " << fmt_g17(cfg.field) << "\n";
  os << "lambda_max = " << fmt_g17(cfg.lambda_max) << "\n";
  os << "q = " << fmt_g17(cfg.q) << "\n";
  os << "k_boltz = " << fmt_g17(cfg.k_boltz) << "\n";
  os << "beta_min = " << fmt_g17(cfg.beta_grid.min) << "\n";
  os << "beta_max = " << fmt_g17(cfg.beta_grid.max) << "\n";
  os << "beta_count = " << cfg.beta_grid.count << "\n";
  os << "beta_spacing = \""
     << (cfg.beta_grid.spacing == Spacing::Log ? "log" : "linear") << "\"\n";
  os << "out = \"" << cfg.out << "\"\n";
  os << "permissive_q = " << (cfg.permissive_q ? "true" : "false") << "\n";
  os << "tolerance = " << fmt_g17(cfg.tolerance) << "\n";
  return os.str();
}

}  // namespace graphene::cli
