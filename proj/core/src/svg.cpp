#include "langsim/svg.hpp"

#include <algorithm>
#include <cstdio>

#include "langsim/error.hpp"

namespace langsim {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 620.0;
constexpr double kTop = 20.0;
constexpr double kBottom = 430.0;
constexpr int kTicks = 5;

std::string fmt(double v, const char* spec) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string coord(double v) { return fmt(v, "%.2f"); }
std::string tick_label(double v) { return fmt(v, "%.3f"); }

std::string escape_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range padded_range(std::span<const double> values) {
  double lo = *std::min_element(values.begin(), values.end());
  double hi = *std::max_element(values.begin(), values.end());
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  double pad = (hi - lo) * 0.05;
  return {lo - pad, hi + pad};
}

}  // namespace

std::string scatter_svg(const PairedSample& sample, const ScatterOptions& options) {
  if (sample.size() == 0) {
    throw Error(ErrorCode::TooFewPoints, "scatter plot needs at least one point");
  }
  Range xr = padded_range(sample.xs());
  Range yr = padded_range(sample.ys());
  auto sx = [&](double v) { return kLeft + (v - xr.lo) / (xr.hi - xr.lo) * (kRight - kLeft); };
  auto sy = [&](double v) { return kBottom - (v - yr.lo) / (yr.hi - yr.lo) * (kBottom - kTop); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " + coord(kWidth) + " " +
         coord(kHeight) + "\">\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + coord(kWidth) + "\" height=\"" + coord(kHeight) +
         "\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg += "<text x=\"" + coord((kLeft + kRight) / 2) +
           "\" y=\"14\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">" +
           escape_text(options.title) + "</text>\n";
  }

  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(kRight) +
         "\" y2=\"" + coord(kBottom) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + coord(kLeft) + "\" y1=\"" + coord(kTop) + "\" x2=\"" + coord(kLeft) +
         "\" y2=\"" + coord(kBottom) + "\" stroke=\"black\"/>\n";

  for (int i = 0; i < kTicks; ++i) {
    double f = static_cast<double>(i) / (kTicks - 1);
    double xv = xr.lo + f * (xr.hi - xr.lo);
    double yv = yr.lo + f * (yr.hi - yr.lo);
    double px = sx(xv);
    double py = sy(yv);
    svg += "<line x1=\"" + coord(px) + "\" y1=\"" + coord(kBottom) + "\" x2=\"" + coord(px) +
           "\" y2=\"" + coord(kBottom + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + coord(px) + "\" y=\"" + coord(kBottom + 18) +
           "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"middle\">" +
           tick_label(xv) + "</text>\n";
    svg += "<line x1=\"" + coord(kLeft - 5) + "\" y1=\"" + coord(py) + "\" x2=\"" + coord(kLeft) +
           "\" y2=\"" + coord(py) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + coord(kLeft - 8) + "\" y=\"" + coord(py + 3) +
           "\" font-family=\"sans-serif\" font-size=\"10\" text-anchor=\"end\">" + tick_label(yv) +
           "</text>\n";
  }

  svg += "<text x=\"" + coord((kLeft + kRight) / 2) + "\" y=\"" + coord(kHeight - 12) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" +
         escape_text(options.x_label) + "</text>\n";
  svg += "<text x=\"16\" y=\"" + coord((kTop + kBottom) / 2) +
         "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         coord((kTop + kBottom) / 2) + ")\">" + escape_text(options.y_label) + "</text>\n";

  for (std::size_t i = 0; i < sample.size(); ++i) {
    double px = sx(sample.xs()[i]);
    double py = sy(sample.ys()[i]);
    const PairLabel& label = sample.labels()[i];
    bool diagonal = !label.source.empty() && label.source == label.target;
    if (diagonal) {
      svg += "<rect x=\"" + coord(px - 3) + "\" y=\"" + coord(py - 3) +
             "\" width=\"6\" height=\"6\" fill=\"#d9822b\"><title>" +
             escape_text(label.source + "->" + label.target) + "</title></rect>\n";
    } else {
      svg += "<circle cx=\"" + coord(px) + "\" cy=\"" + coord(py) +
             "\" r=\"3\" fill=\"#39648d\"><title>" +
             escape_text(label.source + "->" + label.target) + "</title></circle>\n";
    }
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace langsim
