#include "elastic/fab.hpp"

#include <algorithm>
#include <cmath>

namespace elastic {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Wraps into (-pi, pi].
double wrap_angle(double d) {
  d = std::fmod(d + kPi, 2.0 * kPi);
  if (d <= 0.0) d += 2.0 * kPi;
  return d - kPi;
}

std::vector<double> unwrap(std::vector<double> raw) {
  for (std::size_t i = 1; i < raw.size(); ++i)
    raw[i] = raw[i - 1] + wrap_angle(raw[i] - raw[i - 1]);
  return raw;
}

// Transform samples from edge vectors and cell widths; shared by the
// forward map and the inverse's self-check.
std::vector<Complex> samples_from_edges(const std::vector<Complex>& edges,
                                        const std::vector<double>& widths,
                                        double a, double b) {
  const std::size_t m = edges.size();
  std::vector<double> raw(m);
  for (std::size_t i = 0; i < m; ++i) raw[i] = std::arg(edges[i]);
  const std::vector<double> theta = unwrap(std::move(raw));
  const double power = a / (2.0 * b);
  std::vector<Complex> out(m);
  for (std::size_t i = 0; i < m; ++i) {
    const double speed = std::abs(edges[i]) / widths[i];
    out[i] = 2.0 * b * std::sqrt(speed) * std::polar(1.0, power * theta[i]);
  }
  return out;
}

void check_params(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) throw ParamMismatch("transform needs a > 0 and b > 0");
}

}  // namespace

std::vector<double> unwrapped_edge_angles(const DiscreteCurve& curve) {
  const EdgeFrame frame = edge_frame(curve);
  std::vector<double> raw(frame.size());
  for (int i = 0; i < frame.size(); ++i) raw[i] = std::arg(frame.tangents[i]);
  return unwrap(std::move(raw));
}

FabImage fab_forward(const DiscreteCurve& curve, double a, double b) {
  check_params(a, b);
  const int n = curve.vertex_count();
  const int m = curve.edge_count();
  std::vector<Complex> edges(m);
  for (int i = 0; i < m; ++i) {
    edges[i] = curve.vertices[(i + 1) % n] - curve.vertices[i];
    if (edges[i] == Complex(0.0, 0.0)) throw DegenerateEdge(i);
  }
  FabImage image;
  image.a = a;
  image.b = b;
  image.cell_widths.assign(m, 1.0 / m);
  image.samples = samples_from_edges(edges, image.cell_widths, a, b);
  return image;
}

DiscreteCurve fab_inverse(const FabImage& image, Complex basepoint) {
  check_params(image.a, image.b);
  const int m = image.cell_count();
  if (m < 1) throw Error("image has no samples");
  if (static_cast<int>(image.cell_widths.size()) != m)
    throw ParamMismatch("cell_widths size does not match sample count");
  double width_sum = 0.0;
  for (double w : image.cell_widths) {
    if (!(w > 0.0)) throw Error("cell widths must be positive");
    width_sum += w;
  }
  if (std::abs(width_sum - 1.0) > 1e-12) throw Error("cell widths must sum to 1");

  std::vector<double> raw(m);
  double scale = 0.0;
  for (int i = 0; i < m; ++i) {
    if (image.samples[i] == Complex(0.0, 0.0)) throw ZeroSample(i);
    raw[i] = std::arg(image.samples[i]);
    scale = std::max(scale, std::abs(image.samples[i]));
  }
  const std::vector<double> psi = unwrap(std::move(raw));

  const double b2 = 4.0 * image.b * image.b;
  const double power = 2.0 * image.b / image.a;
  std::vector<Complex> edges(m);
  DiscreteCurve out;
  out.closed = false;
  out.vertices.resize(m + 1);
  out.vertices[0] = basepoint;
  for (int i = 0; i < m; ++i) {
    const double speed = std::norm(image.samples[i]) / b2;
    edges[i] = image.cell_widths[i] * speed * std::polar(1.0, power * psi[i]);
    out.vertices[i + 1] = out.vertices[i] + edges[i];
  }

  const std::vector<Complex> check =
      samples_from_edges(edges, image.cell_widths, image.a, image.b);
  for (int i = 0; i < m; ++i) {
    if (std::abs(check[i] - image.samples[i]) > 1e-8 * scale)
      throw InverseMismatch("image is not reproduced by its reconstruction");
  }
  validate(out);
  return out;
}

double l2_distance(const FabImage& q0, const FabImage& q1) {
  if (q0.a != q1.a || q0.b != q1.b)
    throw ParamMismatch("images use different (a, b)");
  if (q0.cell_count() != q1.cell_count())
    throw ParamMismatch("images have different cell counts");
  double sum = 0.0;
  for (int i = 0; i < q0.cell_count(); ++i) {
    if (std::abs(q0.cell_widths[i] - q1.cell_widths[i]) > 1e-12)
      throw ParamMismatch("images have different cell widths");
    sum += q0.cell_widths[i] * std::norm(q0.samples[i] - q1.samples[i]);
  }
  return std::sqrt(sum);
}

std::vector<DiscreteCurve> geodesic(const DiscreteCurve& c0,
                                    const DiscreteCurve& c1, double a, double b,
                                    const std::vector<double>& t_values) {
  if (c0.closed != c1.closed) throw ParamMismatch("curves must share the closed flag");
  if (c0.vertex_count() != c1.vertex_count())
    throw ParamMismatch("curves must share the vertex count; resample first");
  const FabImage q0 = fab_forward(c0, a, b);
  const FabImage q1 = fab_forward(c1, a, b);
  const int m = q0.cell_count();

  double scale = 0.0;
  for (int i = 0; i < m; ++i)
    scale = std::max({scale, std::abs(q0.samples[i]), std::abs(q1.samples[i])});

  std::vector<DiscreteCurve> path;
  path.reserve(t_values.size());
  for (double t : t_values) {
    FabImage qt;
    qt.a = a;
    qt.b = b;
    qt.cell_widths = q0.cell_widths;
    qt.samples.resize(m);
    for (int i = 0; i < m; ++i) {
      qt.samples[i] = (1.0 - t) * q0.samples[i] + t * q1.samples[i];
      if (std::abs(qt.samples[i]) <= 1e-12 * scale) throw ZeroCrossing(i, t);
    }
    const Complex base = (1.0 - t) * c0.vertices[0] + t * c1.vertices[0];
    path.push_back(fab_inverse(qt, base));
  }
  return path;
}

}  // namespace elastic
