#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

// Raised for malformed or inconsistent run configurations (exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ModelBlock {
  std::string kind = "ohmic";  // "ohmic" | "super-ohmic"
  double gamma = 0.01;         // Ohmic gamma, or gamma0 for the quartic bath
  double omega_c = 100.0;      // Ohmic cutoff, or omega_B for the quartic bath
  bool chi_as_printed = false;
};

struct DriveBlock {
  double omega0 = 1.0;
  double upsilon = 0.1;
  std::vector<double> omega_d;  // one curve per entry
  bool include_undriven = true;
};

struct Grid {
  double min = 0.0;
  double max = 0.0;
  int points = 0;
  bool log = true;

  std::vector<double> values() const;
};

struct ChartBlock {
  Grid omega_d{0.4, 2.4, 400, false};
  Grid upsilon{0.0, 1.5, 400, false};
  std::vector<double> gamma{0.0, 0.1};
};

struct BecBlock {
  double m_I_u = 173.938866437;
  double m_B_u = 40.961825258;
  double N_B = 5000.0;
  double omega_I_hz = 375.0;  // trap frequencies in Hz (times 2 pi internally)
  double omega_B_hz = 750.0;
  double g_IB_mantissa = 0.55;
  double g_B_mantissa = 3.0;
  int coupling_exponent = -39;
  double upsilon_rel = 0.2;
  double omega_d_rel = 0.8;  // in units of omega_I
  std::string mu_exponent = "2/3";
};

struct OracleBlock {
  int modes = 2000;
  double omega_max = 1000.0;
  double half_width = 0.5;
  double spacing = 0.005;
  double t_final = 400.0;
  double step = 0.02;
  std::vector<double> temperatures{0.1, 1.0};
  double tolerance = 0.01;
  double driven_omega_d = 0.9;
  double driven_T = 0.1;
  double driven_tolerance = 0.02;
  double driven_t_final = 300.0;
};

struct RunConfig {
  std::string experiment;
  ModelBlock model;
  DriveBlock drive;
  Grid temperature{1e-3, 1.0, 30, true};
  double T = 0.025;        // single temperature (heat scan)
  int order = 2;
  int harmonics = 0;       // 0 -> 2 * order
  bool consistent = false; // bilinear truncation
  int time_samples = 10;
  Grid fit{1e-3, 1e-2, 0, true};
  Grid scan{0.2, 2.4, 221, false};
  ChartBlock chart;
  BecBlock bec;
  OracleBlock oracle;
  std::string fidelity_formula = "corrected";
  std::string csv = "out.csv";
  std::string svg = "out.svg";
  bool allow_unstable = false;

  nlohmann::json source;  // the parsed file, echoed into CSV headers
};

RunConfig load_config(const std::string& path);
RunConfig parse_config(const nlohmann::json& j);

}  // namespace cli
