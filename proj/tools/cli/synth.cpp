#include "cli/synth.hpp"

#include <algorithm>
#include <cmath>

#include "elastic/rng.hpp"

namespace elastic::cli {

namespace {

constexpr double kTau = 6.283185307179586476925;

DiscreteCurve from_samples(std::vector<Complex> pts) {
  DiscreteCurve c;
  c.closed = true;
  c.vertices = std::move(pts);
  return c;
}

DiscreteCurve circle_shape(int n, double radius) {
  std::vector<Complex> pts(n);
  for (int k = 0; k < n; ++k) pts[k] = radius * std::polar(1.0, kTau * k / n);
  return from_samples(std::move(pts));
}

DiscreteCurve ellipse_shape(int n, double eccentricity) {
  const double minor = std::sqrt(std::max(1e-6, 1.0 - eccentricity * eccentricity));
  const int dense = 8 * n;
  std::vector<Complex> pts(dense);
  for (int k = 0; k < dense; ++k) {
    const double t = kTau * k / dense;
    pts[k] = Complex(std::cos(t), minor * std::sin(t));
  }
  return resample_uniform(from_samples(std::move(pts)), n);
}

DiscreteCurve rounded_rectangle_shape(int n, double width, double height,
                                      double corner) {
  const double r = std::clamp(corner, 1e-3, 0.49 * std::min(width, height));
  const double hw = width / 2.0, hh = height / 2.0;
  std::vector<Complex> pts;
  const int per_piece = std::max(8, n);
  const auto arc = [&](Complex center, double from, double to) {
    for (int k = 0; k < per_piece; ++k)
      pts.push_back(center +
                    r * std::polar(1.0, from + (to - from) * k / per_piece));
  };
  const auto edge = [&](Complex from, Complex to) {
    for (int k = 0; k < per_piece; ++k)
      pts.push_back(from + (to - from) * (static_cast<double>(k) / per_piece));
  };
  // counter-clockwise, starting on the bottom edge
  edge({-(hw - r), -hh}, {hw - r, -hh});
  arc({hw - r, -(hh - r)}, -kTau / 4, 0.0);
  edge({hw, -(hh - r)}, {hw, hh - r});
  arc({hw - r, hh - r}, 0.0, kTau / 4);
  edge({hw - r, hh}, {-(hw - r), hh});
  arc({-(hw - r), hh - r}, kTau / 4, kTau / 2);
  edge({-hw, hh - r}, {-hw, -(hh - r)});
  arc({-(hw - r), -(hh - r)}, kTau / 2, 3 * kTau / 4);
  return resample_uniform(from_samples(std::move(pts)), n);
}

DiscreteCurve dumbbell_shape(int n, double neck) {
  const double w = std::clamp(neck, 0.05, 0.95);
  const int dense = 8 * n;
  std::vector<Complex> pts(dense);
  for (int k = 0; k < dense; ++k) {
    const double t = kTau * k / dense;
    const double c = std::cos(t);
    pts[k] = Complex(1.5 * c, (w + (1.0 - w) * c * c) * std::sin(t));
  }
  return resample_uniform(from_samples(std::move(pts)), n);
}

DiscreteCurve star_shape(int n, int points, double amplitude) {
  const double amp = std::clamp(amplitude, 0.0, 0.8);
  const int dense = 8 * n;
  std::vector<Complex> pts(dense);
  for (int k = 0; k < dense; ++k) {
    const double t = kTau * k / dense;
    pts[k] = std::polar(1.0 + amp * std::cos(points * t), t);
  }
  return resample_uniform(from_samples(std::move(pts)), n);
}

Complex centroid(const DiscreteCurve& c) {
  Complex sum(0, 0);
  for (const Complex& v : c.vertices) sum += v;
  return sum / static_cast<double>(c.vertex_count());
}

// Inserts a thin double-back spike of length eps at vertex 0, pointing away
// from the centroid. Adds exactly 2*eps of length and two vertices.
DiscreteCurve appendage_shape(const DiscreteCurve& base, double eps) {
  const Complex v0 = base.vertices[0];
  Complex dir = v0 - centroid(base);
  const double len = std::abs(dir);
  dir = len > 0.0 ? dir / len : Complex(1.0, 0.0);
  DiscreteCurve out;
  out.closed = true;
  out.vertices.reserve(base.vertex_count() + 2);
  out.vertices.push_back(v0);
  out.vertices.push_back(v0 + eps * dir);
  out.vertices.push_back(v0);
  for (int i = 1; i < base.vertex_count(); ++i) out.vertices.push_back(base.vertices[i]);
  return out;
}

}  // namespace

const std::vector<std::string>& synth_generators() {
  static const std::vector<std::string> names = {
      "circle", "ellipse", "rounded-rectangle", "dumbbell", "star", "appendage"};
  return names;
}

DiscreteCurve synth_shape(const std::string& generator, const SynthParams& params) {
  if (params.n < 4) throw Error("synth needs n >= 4");
  Rng rng(mix_seed(params.seed, 0x73686170));
  const auto jittered = [&](double value) {
    return value * (1.0 + params.jitter * rng.uniform(-1.0, 1.0));
  };

  DiscreteCurve curve;
  if (generator == "circle") {
    curve = circle_shape(params.n, jittered(1.0));
  } else if (generator == "ellipse") {
    curve = ellipse_shape(params.n, std::clamp(jittered(params.eccentricity), 0.0, 0.98));
  } else if (generator == "rounded-rectangle") {
    curve = rounded_rectangle_shape(params.n, jittered(params.width),
                                    jittered(params.height), jittered(params.corner));
  } else if (generator == "dumbbell") {
    curve = dumbbell_shape(params.n, jittered(params.neck));
  } else if (generator == "star") {
    curve = star_shape(params.n, params.star_points, jittered(params.star_amplitude));
  } else if (generator == "appendage") {
    SynthParams base_params = params;
    base_params.noise = 0.0;
    base_params.rotate = 0.0;
    if (params.base == "appendage") throw Error("appendage cannot be its own base");
    curve = appendage_shape(synth_shape(params.base, base_params), params.eps);
  } else {
    throw Error("unknown generator: " + generator);
  }

  if (params.rotate != 0.0) curve = rotated(curve, params.rotate);
  if (params.noise > 0.0)
    curve = add_noise(curve, params.noise, mix_seed(params.seed, 0x6e6f6973));
  return curve;
}

}  // namespace elastic::cli
