#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace cli {

// RFC-4180 writer with '#' comment lines. Numbers use the C locale and a fixed
// %.12g format so identical runs produce identical files.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const nlohmann::json& config, const std::string& tool_version);

  void comment(const std::string& line);
  void header(const std::vector<std::string>& columns);
  void row(const std::vector<std::string>& cells);

  static std::string num(double v);
  static std::string quote(const std::string& cell);

 private:
  std::ofstream out_;
  std::size_t columns_ = 0;
};

}  // namespace cli
