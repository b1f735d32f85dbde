#include "cli/svg.hpp"

#include <algorithm>
#include <fstream>

#include "cli/io.hpp"

namespace elastic::cli {

namespace {

constexpr double kCanvas = 800.0;
constexpr double kMargin = 0.06;

struct Box {
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;

  void include(double x, double y) {
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  }
  void include(const DiscreteCurve& c) {
    for (const Complex& v : c.vertices) include(v.real(), v.imag());
  }
};

// Equal-aspect map of a data box into a canvas rectangle, y flipped.
struct Mapping {
  double scale, x0, y0, cx, cy;

  Mapping(const Box& box, double px, double py, double pw, double ph) {
    const double w = std::max(box.xmax - box.xmin, 1e-12);
    const double h = std::max(box.ymax - box.ymin, 1e-12);
    scale = std::min(pw * (1 - 2 * kMargin) / w, ph * (1 - 2 * kMargin) / h);
    cx = px + pw / 2;
    cy = py + ph / 2;
    x0 = (box.xmin + box.xmax) / 2;
    y0 = (box.ymin + box.ymax) / 2;
  }
  std::pair<double, double> operator()(double x, double y) const {
    return {cx + (x - x0) * scale, cy - (y - y0) * scale};
  }
};

std::string path_for(const DiscreteCurve& c, const Mapping& map) {
  std::string d;
  for (int i = 0; i < c.vertex_count(); ++i) {
    const auto [x, y] = map(c.vertices[i].real(), c.vertices[i].imag());
    d += (i == 0 ? "M " : "L ") + format_double(x) + " " + format_double(y) + " ";
  }
  if (c.closed) d += "Z";
  return d;
}

std::string svg_header() {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 800\" "
         "width=\"800\" height=\"800\">\n"
         "<rect width=\"800\" height=\"800\" fill=\"white\"/>\n";
}

void save(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write: " + path);
  out << svg_header() << body << "</svg>\n";
  if (!out) throw IoError("write failed: " + path);
}

std::string curve_element(const DiscreteCurve& c, const Mapping& map,
                          const std::string& color, double width) {
  return "<path d=\"" + path_for(c, map) + "\" fill=\"none\" stroke=\"" + color +
         "\" stroke-width=\"" + format_double(width) + "\"/>\n";
}

}  // namespace

const char* palette_color(int k) {
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                 "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  return colors[((k % 8) + 8) % 8];
}

void write_curves_svg(const std::string& path,
                      const std::vector<StyledCurve>& curves) {
  Box box;
  for (const StyledCurve& sc : curves) box.include(sc.curve);
  const Mapping map(box, 0, 0, kCanvas, kCanvas);
  std::string body;
  for (const StyledCurve& sc : curves)
    body += curve_element(sc.curve, map, sc.color, sc.stroke_width);
  save(path, body);
}

void write_panels_svg(const std::string& path,
                      const std::vector<std::vector<StyledCurve>>& panels,
                      const std::vector<std::string>& captions) {
  const int p = std::max<int>(1, static_cast<int>(panels.size()));
  const int cols = p <= 4 ? p : (p + 1) / 2;
  const int rows = (p + cols - 1) / cols;
  const double pw = kCanvas / cols;
  const double ph = kCanvas / rows;

  Box shared;  // one scale across panels so shapes stay comparable
  for (const auto& panel : panels)
    for (const StyledCurve& sc : panel) shared.include(sc.curve);

  std::string body;
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const double px = pw * (i % cols);
    const double py = ph * (i / cols);
    Box local = shared;
    const Mapping map(local, px, py, pw, ph - 18.0);
    for (const StyledCurve& sc : panels[i])
      body += curve_element(sc.curve, map, sc.color, sc.stroke_width);
    if (i < captions.size() && !captions[i].empty()) {
      body += "<text x=\"" + format_double(px + pw / 2) + "\" y=\"" +
              format_double(py + ph - 4) +
              "\" text-anchor=\"middle\" font-size=\"14\" "
              "font-family=\"sans-serif\">" +
              captions[i] + "</text>\n";
    }
  }
  save(path, body);
}

void write_scatter_svg(const std::string& path,
                       const std::vector<std::pair<double, double>>& points,
                       const std::vector<int>& classes) {
  Box box;
  for (const auto& [x, y] : points) box.include(x, y);
  const Mapping map(box, 0, 0, kCanvas, kCanvas);
  std::string body;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto [x, y] = map(points[i].first, points[i].second);
    const int cls = i < classes.size() ? classes[i] : 0;
    body += "<circle cx=\"" + format_double(x) + "\" cy=\"" + format_double(y) +
            "\" r=\"7\" fill=\"" + palette_color(cls) + "\" fill-opacity=\"0.8\"/>\n";
  }
  save(path, body);
}

}  // namespace elastic::cli
