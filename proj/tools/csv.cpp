#include "csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "config.hpp"

namespace cli {

CsvWriter::CsvWriter(const std::string& path, const nlohmann::json& config, const std::string& tool_version)
    : out_(path, std::ios::binary) {
  if (!out_) throw ConfigError("output: cannot write '" + path + "'");
  comment("lcthermo " + tool_version);
  std::istringstream dump(config.dump(2));
  comment("config:");
  for (std::string line; std::getline(dump, line);) comment("  " + line);
}

void CsvWriter::comment(const std::string& line) { out_ << "# " << line << "\r\n"; }

void CsvWriter::header(const std::vector<std::string>& columns) {
  columns_ = columns.size();
  row(columns);
}

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (columns_ && cells.size() != columns_) throw std::logic_error("csv: row width differs from header");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) out_ << ',';
    out_ << quote(cells[i]);
  }
  out_ << "\r\n";
  if (!out_) throw std::runtime_error("csv: write failed");
}

std::string CsvWriter::num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string CsvWriter::quote(const std::string& cell) {
  if (cell.find_first_of(",\"\r\n") == std::string::npos) return cell;
  std::string q = "\"";
  for (char c : cell) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

}  // namespace cli
