#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elastic/curve.hpp"

namespace elastic::cli {

struct StyledCurve {
  DiscreteCurve curve;
  std::string color = "#1f77b4";
  double stroke_width = 2.0;
};

const char* palette_color(int k);

/// All SVG output uses a fixed 800x800 viewbox with an equal-aspect mapping
/// of the data bounding box (6% margin), y pointing up.
void write_curves_svg(const std::string& path,
                      const std::vector<StyledCurve>& curves);

/// One sub-panel per entry, laid out left to right on a shared scale, with
/// a caption under each panel.
void write_panels_svg(const std::string& path,
                      const std::vector<std::vector<StyledCurve>>& panels,
                      const std::vector<std::string>& captions);

/// Scatter plot of 2D points colored by class index.
void write_scatter_svg(const std::string& path,
                       const std::vector<std::pair<double, double>>& points,
                       const std::vector<int>& classes);

}  // namespace elastic::cli
