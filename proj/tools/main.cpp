#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <thread>

#include "config.hpp"
#include "lcthermo/lcthermo.h"
#include "runs.hpp"

#ifndef LCT_GIT_DESCRIBE
#define LCT_GIT_DESCRIBE "unknown"
#endif

namespace {

int default_threads() {
  if (const char* env = std::getenv("LCTHERMO_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring invalid LCTHERMO_THREADS='" << env << "'\n";
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Limit-cycle thermometry experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("lcthermo ") + lct_version() + " (" + LCT_GIT_DESCRIBE + ")");

  std::string config_path, out_dir = ".";
  int threads = 0, order = 0;
  bool allow_unstable = false;
  const char* subs[][2] = {
      {"sensitivity", "Instantaneous and cycle-averaged temperature QFI against T"},
      {"bec", "Position-variance responsiveness of an impurity in a condensate"},
      {"heat-scan", "Cycle-averaged heat current against drive frequency"},
      {"stability-chart", "Stability chart of the damped Mathieu oscillator"},
      {"oracle-check", "Compare the limit cycle with an explicit discretised bath"},
  };
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s[0], s[1]);
    sub->add_option("--config", config_path, "JSON run configuration")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "Output directory");
    sub->add_option("--threads", threads, "Worker threads (default: LCTHERMO_THREADS or all cores)")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--allow-unstable", allow_unstable, "Compute drive points outside the stable region");
    sub->add_option("--order", order, "Amplitude order")->check(CLI::IsMember({2, 4}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : cli::kConfigError;
  }

  cli::RunContext ctx;
  ctx.out_dir = out_dir;
  ctx.threads = threads > 0 ? threads : default_threads();
  ctx.allow_unstable = allow_unstable;
  ctx.order_override = order;
  ctx.version = std::string(lct_version()) + " git " + LCT_GIT_DESCRIBE;
  ctx.log = &std::cout;

  const std::string sub = app.get_subcommands().front()->get_name();
  try {
    const cli::RunConfig cfg = cli::load_config(config_path);
    return cli::dispatch(sub, cfg, ctx);
  } catch (const cli::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kConfigError;
  } catch (const cli::RunError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kNumericalFailure;
  }
}
