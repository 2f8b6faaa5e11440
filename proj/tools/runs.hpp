#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "config.hpp"

namespace cli {

enum ExitCode { kSuccess = 0, kConfigError = 2, kStabilityRefusal = 3, kNumericalFailure = 4 };

struct RunError : std::runtime_error {
  RunError(int code, const std::string& what) : std::runtime_error(what), code(code) {}
  int code;
};

struct RunContext {
  std::string out_dir = ".";
  int threads = 1;
  bool allow_unstable = false;
  int order_override = 0;  // 0: use the config value
  std::string version;
  std::ostream* log = nullptr;
};

// Each returns the process exit code; failures are reported as RunError.
int run_sensitivity(const RunConfig& cfg, const RunContext& ctx);
int run_bec(const RunConfig& cfg, const RunContext& ctx);
int run_heat_scan(const RunConfig& cfg, const RunContext& ctx);
int run_stability_chart(const RunConfig& cfg, const RunContext& ctx);
int run_oracle_check(const RunConfig& cfg, const RunContext& ctx);

int dispatch(const std::string& subcommand, const RunConfig& cfg, const RunContext& ctx);

}  // namespace cli
