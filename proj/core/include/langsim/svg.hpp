#pragma once

#include <string>

#include "langsim/stats.hpp"

namespace langsim {

struct ScatterOptions {
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained 640x480 scatter plot. Points whose label has
/// source == target are drawn as squares, the rest as circles. Output is
/// byte-deterministic for identical input.
std::string scatter_svg(const PairedSample& sample, const ScatterOptions& options);

}  // namespace langsim
