#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  bool dashed = false;
};

struct PlotSpec {
  std::string title;
  std::string xlabel;
  std::string ylabel;
  bool logx = false;
  bool logy = false;
};

// Line plot; non-finite points and (on log axes) non-positive points are skipped.
void write_line_plot(const std::string& path, const PlotSpec& spec, const std::vector<Series>& series);

// Cells coloured by flag (0 stable, 1 marginal, 2 unstable), row-major over y.
void write_chart(const std::string& path, const PlotSpec& spec, const std::vector<double>& x,
                 const std::vector<double>& y, const std::vector<std::uint8_t>& flags);

}  // namespace cli
