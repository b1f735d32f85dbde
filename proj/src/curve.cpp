#include "elastic/curve.hpp"

#include <algorithm>
#include <cmath>

#include "elastic/rng.hpp"

namespace elastic {

void validate(const DiscreteCurve& curve) {
  const int n = curve.vertex_count();
  if (n < 2) throw Error("curve needs at least 2 vertices");
  for (const Complex& v : curve.vertices) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw Error("curve has a non-finite vertex");
  }
  const int m = curve.edge_count();
  for (int i = 0; i < m; ++i) {
    if (curve.vertices[(i + 1) % n] == curve.vertices[i]) throw DegenerateEdge(i);
  }
}

EdgeFrame edge_frame(const DiscreteCurve& curve) {
  const int n = curve.vertex_count();
  if (n < 2) throw Error("curve needs at least 2 vertices");
  const int m = curve.edge_count();
  EdgeFrame frame;
  frame.lengths.resize(m);
  frame.midpoints.resize(m);
  frame.tangents.resize(m);
  for (int i = 0; i < m; ++i) {
    const Complex p = curve.vertices[i];
    const Complex q = curve.vertices[(i + 1) % n];
    const Complex e = q - p;
    const double len = std::abs(e);
    if (len == 0.0) throw DegenerateEdge(i);
    frame.lengths[i] = len;
    frame.midpoints[i] = 0.5 * (p + q);
    frame.tangents[i] = e / len;
  }
  return frame;
}

double polygonal_length(const DiscreteCurve& curve) {
  const int n = curve.vertex_count();
  const int m = curve.edge_count();
  double total = 0.0;
  for (int i = 0; i < m; ++i)
    total += std::abs(curve.vertices[(i + 1) % n] - curve.vertices[i]);
  return total;
}

DiscreteCurve resample_uniform(const DiscreteCurve& curve, int n) {
  if (n < 2) throw Error("resample target needs n >= 2");
  const EdgeFrame frame = edge_frame(curve);
  const int nv = curve.vertex_count();
  const int m = frame.size();

  std::vector<double> cum(m + 1, 0.0);
  for (int i = 0; i < m; ++i) cum[i + 1] = cum[i] + frame.lengths[i];
  const double total = cum[m];

  auto point_at = [&](double s) -> Complex {
    if (s <= 0.0) return curve.vertices[0];
    if (s >= total) return curve.closed ? curve.vertices[0] : curve.vertices[nv - 1];
    const int i = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), s) -
                                   cum.begin()) - 1;
    const double u = (s - cum[i]) / frame.lengths[i];
    const Complex p = curve.vertices[i];
    const Complex q = curve.vertices[(i + 1) % nv];
    return p + u * (q - p);
  };

  DiscreteCurve out;
  out.closed = curve.closed;
  out.vertices.resize(n);
  if (curve.closed) {
    for (int k = 0; k < n; ++k) out.vertices[k] = point_at(total * k / n);
  } else {
    for (int k = 0; k < n; ++k) out.vertices[k] = point_at(total * k / (n - 1));
    out.vertices[n - 1] = curve.vertices[nv - 1];
  }
  validate(out);
  return out;
}

namespace {
inline double dot(Complex u, Complex v) {
  return u.real() * v.real() + u.imag() * v.imag();
}
}  // namespace

double elastic_metric(const DiscreteCurve& curve, const std::vector<Complex>& h,
                      const std::vector<Complex>& k, double a, double b) {
  const int n = curve.vertex_count();
  if (static_cast<int>(h.size()) != n || static_cast<int>(k.size()) != n)
    throw DimensionMismatch("displacement fields must have one entry per vertex");
  const EdgeFrame frame = edge_frame(curve);
  const int m = frame.size();
  double sum = 0.0;
  for (int i = 0; i < m; ++i) {
    const double len = frame.lengths[i];
    const Complex dh = (h[(i + 1) % n] - h[i]) / len;
    const Complex dk = (k[(i + 1) % n] - k[i]) / len;
    const Complex tang = frame.tangents[i];
    const Complex norm = Complex(0.0, 1.0) * tang;
    sum += (a * a * dot(dh, norm) * dot(dk, norm) +
            b * b * dot(dh, tang) * dot(dk, tang)) * len;
  }
  return sum;
}

DiscreteCurve add_noise(const DiscreteCurve& curve, double amplitude,
                        std::uint64_t seed) {
  if (amplitude < 0.0) throw Error("noise amplitude must be nonnegative");
  Rng rng(seed);
  DiscreteCurve out = curve;
  for (Complex& v : out.vertices)
    v += amplitude * Complex(rng.gaussian(), rng.gaussian());
  validate(out);
  return out;
}

DiscreteCurve translated(const DiscreteCurve& curve, Complex z) {
  DiscreteCurve out = curve;
  for (Complex& v : out.vertices) v += z;
  return out;
}

DiscreteCurve rotated(const DiscreteCurve& curve, double alpha) {
  const Complex w = std::polar(1.0, alpha);
  DiscreteCurve out = curve;
  for (Complex& v : out.vertices) v *= w;
  return out;
}

std::pair<Complex, Complex> bounding_box(const DiscreteCurve& curve) {
  double xmin = curve.vertices[0].real(), xmax = xmin;
  double ymin = curve.vertices[0].imag(), ymax = ymin;
  for (const Complex& v : curve.vertices) {
    xmin = std::min(xmin, v.real());
    xmax = std::max(xmax, v.real());
    ymin = std::min(ymin, v.imag());
    ymax = std::max(ymax, v.imag());
  }
  return {Complex(xmin, ymin), Complex(xmax, ymax)};
}

double bounding_box_diagonal(const DiscreteCurve& curve) {
  const auto [lo, hi] = bounding_box(curve);
  return std::abs(hi - lo);
}

DiscreteCurve cut_open(const DiscreteCurve& curve, int seam) {
  if (!curve.closed) throw ParamMismatch("cut_open expects a closed curve");
  const int n = curve.vertex_count();
  seam = ((seam % n) + n) % n;
  DiscreteCurve out;
  out.closed = false;
  out.vertices.reserve(n + 1);
  for (int i = 0; i < n; ++i) out.vertices.push_back(curve.vertices[(seam + i) % n]);
  out.vertices.push_back(curve.vertices[seam]);
  return out;
}

DiscreteCurve cyclic_shift(const DiscreteCurve& curve, int shift) {
  if (!curve.closed) throw ParamMismatch("cyclic_shift expects a closed curve");
  const int n = curve.vertex_count();
  shift = ((shift % n) + n) % n;
  DiscreteCurve out;
  out.closed = true;
  out.vertices.reserve(n);
  for (int i = 0; i < n; ++i) out.vertices.push_back(curve.vertices[(shift + i) % n]);
  return out;
}

Complex evaluate_uniform(const DiscreteCurve& curve, double t) {
  const int n = curve.vertex_count();
  if (t <= 0.0) return curve.vertices[0];
  if (t >= 1.0) return curve.vertices[n - 1];
  const double x = t * (n - 1);
  const int i = std::min(static_cast<int>(x), n - 2);
  const double u = x - i;
  return curve.vertices[i] + u * (curve.vertices[i + 1] - curve.vertices[i]);
}

}  // namespace elastic
