#include "config.hpp"

#include <cmath>
#include <fstream>
#include <set>

namespace cli {

namespace {

using nlohmann::json;

template <class T>
void get(const json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

void check_keys(const json& j, const std::string& where, const std::set<std::string>& allowed) {
  if (!j.is_object()) throw ConfigError("config: '" + where + "' must be an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw ConfigError("config: unknown key '" + k + "' in " + where);
}

Grid parse_grid(const json& j, const std::string& where, Grid g) {
  check_keys(j, where, {"min", "max", "points", "log"});
  get(j, "min", g.min);
  get(j, "max", g.max);
  get(j, "points", g.points);
  get(j, "log", g.log);
  if (g.points < 1) throw ConfigError("config: " + where + ".points must be at least 1");
  if (!(g.max >= g.min)) throw ConfigError("config: " + where + ".max must not be below min");
  if (g.log && !(g.min > 0.0)) throw ConfigError("config: " + where + " is log-spaced and needs min > 0");
  return g;
}

}  // namespace

std::vector<double> Grid::values() const {
  std::vector<double> v;
  if (points == 1) return {min};
  for (int i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / (points - 1);
    v.push_back(log ? std::exp(std::log(min) + f * (std::log(max) - std::log(min))) : min + f * (max - min));
  }
  return v;
}

RunConfig parse_config(const json& j) {
  check_keys(j, "config",
             {"experiment", "model", "drive", "temperature", "T", "order", "harmonics", "truncation", "time", "fit",
              "scan", "chart", "bec", "oracle", "overrides", "output", "allow_unstable", "description"});
  RunConfig c;
  c.source = j;
  get(j, "experiment", c.experiment);
  static const std::set<std::string> kinds{"sensitivity", "bec", "heat-scan", "stability-chart", "oracle-check"};
  if (!kinds.count(c.experiment)) throw ConfigError("config: unknown experiment '" + c.experiment + "'");

  if (j.contains("model")) {
    const json& m = j["model"];
    check_keys(m, "model", {"kind", "gamma", "omega_c", "gamma0", "omega_b", "chi"});
    get(m, "kind", c.model.kind);
    if (c.model.kind == "ohmic") {
      get(m, "gamma", c.model.gamma);
      get(m, "omega_c", c.model.omega_c);
    } else if (c.model.kind == "super-ohmic") {
      get(m, "gamma0", c.model.gamma);
      get(m, "omega_b", c.model.omega_c);
    } else {
      throw ConfigError("config: model.kind must be 'ohmic' or 'super-ohmic'");
    }
    std::string chi = "consistent";
    get(m, "chi", chi);
    if (chi != "consistent" && chi != "as-printed") throw ConfigError("config: model.chi must be consistent|as-printed");
    c.model.chi_as_printed = chi == "as-printed";
  }
  if (j.contains("drive")) {
    const json& d = j["drive"];
    check_keys(d, "drive", {"omega0", "upsilon", "omega_d", "include_undriven"});
    get(d, "omega0", c.drive.omega0);
    get(d, "upsilon", c.drive.upsilon);
    if (d.contains("omega_d")) {
      if (d["omega_d"].is_number())
        c.drive.omega_d = {d["omega_d"].get<double>()};
      else
        get(d, "omega_d", c.drive.omega_d);
    }
    get(d, "include_undriven", c.drive.include_undriven);
  }
  if (j.contains("temperature")) c.temperature = parse_grid(j["temperature"], "temperature", c.temperature);
  get(j, "T", c.T);
  get(j, "order", c.order);
  get(j, "harmonics", c.harmonics);
  std::string trunc = "full";
  get(j, "truncation", trunc);
  if (trunc != "full" && trunc != "consistent") throw ConfigError("config: truncation must be full|consistent");
  c.consistent = trunc == "consistent";
  if (j.contains("time")) {
    check_keys(j["time"], "time", {"samples"});
    get(j["time"], "samples", c.time_samples);
  }
  c.fit.points = 1;
  if (j.contains("fit")) {
    check_keys(j["fit"], "fit", {"min", "max"});
    get(j["fit"], "min", c.fit.min);
    get(j["fit"], "max", c.fit.max);
  }
  if (j.contains("scan")) c.scan = parse_grid(j["scan"], "scan", c.scan);
  if (j.contains("chart")) {
    const json& ch = j["chart"];
    check_keys(ch, "chart", {"omega_d", "upsilon", "gamma"});
    if (ch.contains("omega_d")) c.chart.omega_d = parse_grid(ch["omega_d"], "chart.omega_d", c.chart.omega_d);
    if (ch.contains("upsilon")) c.chart.upsilon = parse_grid(ch["upsilon"], "chart.upsilon", c.chart.upsilon);
    get(ch, "gamma", c.chart.gamma);
  }
  if (j.contains("bec")) {
    const json& b = j["bec"];
    check_keys(b, "bec",
               {"m_I_u", "m_B_u", "N_B", "omega_I_hz", "omega_B_hz", "g_IB_mantissa", "g_B_mantissa", "upsilon_rel",
                "omega_d_rel"});
    get(b, "m_I_u", c.bec.m_I_u);
    get(b, "m_B_u", c.bec.m_B_u);
    get(b, "N_B", c.bec.N_B);
    get(b, "omega_I_hz", c.bec.omega_I_hz);
    get(b, "omega_B_hz", c.bec.omega_B_hz);
    get(b, "g_IB_mantissa", c.bec.g_IB_mantissa);
    get(b, "g_B_mantissa", c.bec.g_B_mantissa);
    get(b, "upsilon_rel", c.bec.upsilon_rel);
    get(b, "omega_d_rel", c.bec.omega_d_rel);
  }
  if (j.contains("oracle")) {
    const json& o = j["oracle"];
    check_keys(o, "oracle",
               {"modes", "omega_max", "half_width", "spacing", "t_final", "step", "temperatures", "tolerance",
                "driven_omega_d", "driven_T", "driven_tolerance", "driven_t_final"});
    get(o, "modes", c.oracle.modes);
    get(o, "omega_max", c.oracle.omega_max);
    get(o, "half_width", c.oracle.half_width);
    get(o, "spacing", c.oracle.spacing);
    get(o, "t_final", c.oracle.t_final);
    get(o, "step", c.oracle.step);
    get(o, "temperatures", c.oracle.temperatures);
    get(o, "tolerance", c.oracle.tolerance);
    get(o, "driven_omega_d", c.oracle.driven_omega_d);
    get(o, "driven_T", c.oracle.driven_T);
    get(o, "driven_tolerance", c.oracle.driven_tolerance);
    get(o, "driven_t_final", c.oracle.driven_t_final);
  }
  if (j.contains("overrides")) {
    const json& o = j["overrides"];
    check_keys(o, "overrides", {"fidelity_formula", "mu_exponent", "coupling_exponent"});
    get(o, "fidelity_formula", c.fidelity_formula);
    get(o, "mu_exponent", c.bec.mu_exponent);
    get(o, "coupling_exponent", c.bec.coupling_exponent);
    if (c.fidelity_formula != "corrected" && c.fidelity_formula != "as-printed")
      throw ConfigError("config: overrides.fidelity_formula must be corrected|as-printed");
    if (c.bec.mu_exponent != "2/3" && c.bec.mu_exponent != "3/2")
      throw ConfigError("config: overrides.mu_exponent must be \"2/3\" or \"3/2\"");
  }
  if (j.contains("output")) {
    check_keys(j["output"], "output", {"csv", "svg"});
    get(j["output"], "csv", c.csv);
    get(j["output"], "svg", c.svg);
  }
  get(j, "allow_unstable", c.allow_unstable);

  if (c.order < 0 || c.order > 8) throw ConfigError("config: order must be in [0, 8]");
  if (c.time_samples < 1) throw ConfigError("config: time.samples must be positive");
  if (c.experiment == "sensitivity" && c.drive.omega_d.empty() && !c.drive.include_undriven)
    throw ConfigError("config: sensitivity run has no curves");
  if (c.experiment == "stability-chart" && c.chart.gamma.empty())
    throw ConfigError("config: chart.gamma must list at least one damping");
  if (c.experiment == "oracle-check" && c.oracle.temperatures.empty())
    throw ConfigError("config: oracle.temperatures must be nonempty");
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in, nullptr, true, true);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return parse_config(j);
}

}  // namespace cli
