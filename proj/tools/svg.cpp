#include "svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include "config.hpp"

namespace cli {

namespace {

constexpr double kW = 720, kH = 480, kL = 80, kR = 160, kT = 40, kB = 60;
const char* kColours[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

std::string esc(const std::string& s) {
  std::string o;
  for (char c : s) {
    if (c == '<') o += "&lt;";
    else if (c == '>') o += "&gt;";
    else if (c == '&') o += "&amp;";
    else o += c;
  }
  return o;
}

struct Axis {
  double lo, hi;
  bool log;
  double map(double v, double a, double b) const {
    const double f = log ? (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo)) : (v - lo) / (hi - lo);
    return a + f * (b - a);
  }
};

bool usable(double v, bool log) { return std::isfinite(v) && (!log || v > 0.0); }

Axis make_axis(const std::vector<const std::vector<double>*>& data, bool log) {
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto* d : data)
    for (double v : *d)
      if (usable(v, log)) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
      }
  if (!std::isfinite(lo)) lo = log ? 1.0 : 0.0, hi = log ? 10.0 : 1.0;
  if (hi == lo) {
    if (log) lo /= 2, hi *= 2;
    else lo -= 0.5, hi += 0.5;
  }
  return {lo, hi, log};
}

std::ofstream open(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("output: cannot write '" + path + "'");
  return out;
}

void frame(std::ofstream& out, const PlotSpec& spec, const Axis& ax, const Axis& ay) {
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW << "\" height=\"" << kH
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<text x=\"" << kW / 2 << "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" << esc(spec.title)
      << "</text>\n";
  out << "<rect x=\"" << kL << "\" y=\"" << kT << "\" width=\"" << kW - kL - kR << "\" height=\"" << kH - kT - kB
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double f = i / 4.0;
    const double vx = ax.log ? std::pow(10.0, std::log10(ax.lo) + f * (std::log10(ax.hi) - std::log10(ax.lo)))
                             : ax.lo + f * (ax.hi - ax.lo);
    const double vy = ay.log ? std::pow(10.0, std::log10(ay.lo) + f * (std::log10(ay.hi) - std::log10(ay.lo)))
                             : ay.lo + f * (ay.hi - ay.lo);
    const double px = kL + f * (kW - kL - kR);
    const double py = kH - kB - f * (kH - kT - kB);
    out << "<text x=\"" << px << "\" y=\"" << kH - kB + 16 << "\" text-anchor=\"middle\">" << fmt(vx) << "</text>\n";
    out << "<text x=\"" << kL - 6 << "\" y=\"" << py + 4 << "\" text-anchor=\"end\">" << fmt(vy) << "</text>\n";
  }
  out << "<text x=\"" << (kL + kW - kR) / 2 << "\" y=\"" << kH - 16 << "\" text-anchor=\"middle\">"
      << esc(spec.xlabel) << "</text>\n";
  out << "<text transform=\"translate(16," << (kT + kH - kB) / 2 << ") rotate(-90)\" text-anchor=\"middle\">"
      << esc(spec.ylabel) << "</text>\n";
}

}  // namespace

void write_line_plot(const std::string& path, const PlotSpec& spec, const std::vector<Series>& series) {
  std::vector<const std::vector<double>*> xs, ys;
  for (const auto& s : series) {
    xs.push_back(&s.x);
    ys.push_back(&s.y);
  }
  const Axis ax = make_axis(xs, spec.logx), ay = make_axis(ys, spec.logy);
  auto out = open(path);
  frame(out, spec, ax, ay);
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* colour = kColours[i % 6];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"1.5\""
        << (s.dashed ? " stroke-dasharray=\"6,4\"" : "") << " points=\"";
    for (std::size_t k = 0; k < s.x.size() && k < s.y.size(); ++k) {
      if (!usable(s.x[k], spec.logx) || !usable(s.y[k], spec.logy)) continue;
      out << fmt(ax.map(s.x[k], kL, kW - kR)) << ',' << fmt(ay.map(s.y[k], kH - kB, kT)) << ' ';
    }
    out << "\"/>\n";
    const double ly = kT + 16 + 18 * i;
    out << "<line x1=\"" << kW - kR + 10 << "\" y1=\"" << ly << "\" x2=\"" << kW - kR + 34 << "\" y2=\"" << ly
        << "\" stroke=\"" << colour << "\" stroke-width=\"2\"/>\n";
    out << "<text x=\"" << kW - kR + 40 << "\" y=\"" << ly + 4 << "\">" << esc(s.label) << "</text>\n";
  }
  out << "</svg>\n";
}

void write_chart(const std::string& path, const PlotSpec& spec, const std::vector<double>& x,
                 const std::vector<double>& y, const std::vector<std::uint8_t>& flags) {
  const Axis ax = make_axis({&x}, false), ay = make_axis({&y}, false);
  auto out = open(path);
  frame(out, spec, ax, ay);
  const double cw = (kW - kL - kR) / std::max<std::size_t>(1, x.size());
  const double ch = (kH - kT - kB) / std::max<std::size_t>(1, y.size());
  // One rect per run of unstable/marginal cells in each row keeps the file small.
  for (std::size_t r = 0; r < y.size(); ++r) {
    std::size_t c = 0;
    while (c < x.size()) {
      const std::uint8_t f = flags[r * x.size() + c];
      std::size_t e = c;
      while (e < x.size() && flags[r * x.size() + e] == f) ++e;
      if (f != 0) {
        out << "<rect x=\"" << fmt(kL + c * cw) << "\" y=\"" << fmt(kH - kB - (r + 1) * ch) << "\" width=\""
            << fmt((e - c) * cw) << "\" height=\"" << fmt(ch) << "\" fill=\"" << (f == 2 ? "#d62728" : "#ff7f0e")
            << "\"/>\n";
      }
      c = e;
    }
  }
  out << "<text x=\"" << kW - kR + 10 << "\" y=\"" << kT + 20 << "\" fill=\"#d62728\">unstable</text>\n";
  out << "<text x=\"" << kW - kR + 10 << "\" y=\"" << kT + 38 << "\" fill=\"#ff7f0e\">marginal</text>\n";
  out << "</svg>\n";
}

}  // namespace cli
