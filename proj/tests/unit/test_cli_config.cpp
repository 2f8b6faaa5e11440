#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "config.hpp"
#include "csv.hpp"

using nlohmann::json;

TEST_CASE("shipped configs parse") {
  for (const char* name : {"sensitivity", "bec", "heat-scan", "stability-chart", "oracle-check"}) {
    const auto cfg = cli::load_config(std::string(LCT_CONFIG_DIR) + "/" + name + ".json");
    CHECK_FALSE(cfg.experiment.empty());
  }
}

TEST_CASE("config validation") {
  const json ok = {{"experiment", "sensitivity"}, {"drive", {{"upsilon", 0.1}, {"omega_d", {0.9}}}}};
  CHECK(cli::parse_config(ok).drive.omega_d.size() == 1);
  json bad = ok;
  bad["colour"] = "red";
  CHECK_THROWS_AS(cli::parse_config(bad), cli::ConfigError);
  bad = ok;
  bad["model"] = {{"kind", "sub-ohmic"}};
  CHECK_THROWS_AS(cli::parse_config(bad), cli::ConfigError);
  bad = ok;
  bad["experiment"] = "nonsense";
  CHECK_THROWS_AS(cli::parse_config(bad), cli::ConfigError);
}

TEST_CASE("grids") {
  const cli::Grid lin{0.0, 1.0, 5, false}, lg{1e-3, 1.0, 4, true};
  CHECK(lin.values() == std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0});
  CHECK(lg.values()[1] == doctest::Approx(1e-2));
  CHECK(lg.values().back() == 1.0);
}

TEST_CASE("csv quoting and layout") {
  CHECK(cli::CsvWriter::quote("plain") == "plain");
  CHECK(cli::CsvWriter::quote("a,b") == "\"a,b\"");
  CHECK(cli::CsvWriter::quote("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(cli::CsvWriter::num(0.1) == "0.1");
  const auto path = std::filesystem::temp_directory_path() / "lcthermo_csv_test.csv";
  {
    cli::CsvWriter w(path.string(), json{{"experiment", "bec"}}, "test");
    w.header({"x", "y"});
    w.row({"1", "2"});
    CHECK_THROWS(w.row({"1"}));
  }
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();
  CHECK(text.rfind("# lcthermo test", 0) == 0);
  CHECK(text.find("x,y\r\n1,2\r\n") != std::string::npos);
  std::filesystem::remove(path);
}
