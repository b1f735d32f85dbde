#pragma once

// Shared fixtures for the test suites: deterministic smooth random curves,
// canonical shapes, and small numeric helpers.

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "elastic/curve.hpp"
#include "elastic/rng.hpp"

namespace testsupport {

using elastic::Complex;
using elastic::DiscreteCurve;

constexpr double kTau = 6.283185307179586476925;

inline DiscreteCurve circle(int n, double radius = 1.0, Complex center = {0, 0}) {
  DiscreteCurve c;
  c.closed = true;
  c.vertices.resize(n);
  for (int k = 0; k < n; ++k)
    c.vertices[k] = center + radius * std::polar(1.0, kTau * k / n);
  return c;
}

inline DiscreteCurve ellipse(int n, double ax, double ay) {
  DiscreteCurve c;
  c.closed = true;
  c.vertices.resize(n);
  for (int k = 0; k < n; ++k) {
    const double t = kTau * k / n;
    c.vertices[k] = Complex(ax * std::cos(t), ay * std::sin(t));
  }
  return c;
}

inline DiscreteCurve segment(Complex from, Complex to, int n) {
  DiscreteCurve c;
  c.closed = false;
  c.vertices.resize(n);
  for (int k = 0; k < n; ++k)
    c.vertices[k] = from + (to - from) * (static_cast<double>(k) / (n - 1));
  return c;
}

/// Smooth random open curve: a near-horizontal base with a low-order random
/// Fourier perturbation. The first edge stays close to the +x direction, so
/// transform angle branches are benign for every (a, b) under test.
inline DiscreteCurve random_open_curve(std::uint64_t seed, int n) {
  elastic::Rng rng(seed);
  std::vector<double> ar(5), ai(5);
  for (int k = 0; k < 5; ++k) {
    ar[k] = rng.gaussian() * 0.25 / ((k + 1) * (k + 1));
    ai[k] = rng.gaussian() * 0.25 / ((k + 1) * (k + 1));
  }
  DiscreteCurve c;
  c.closed = false;
  c.vertices.resize(n);
  for (int v = 0; v < n; ++v) {
    const double t = static_cast<double>(v) / (n - 1);
    double x = t, y = 0.0;
    for (int k = 0; k < 5; ++k) {
      x += ar[k] * std::sin(kTau * (k + 1) * t) * 0.2;
      y += ai[k] * std::sin(kTau * (k + 1) * t) * 0.35;
    }
    c.vertices[v] = Complex(x, y);
  }
  return c;
}

/// Smooth random closed curve: radial Fourier perturbation of a circle.
inline DiscreteCurve random_closed_curve(std::uint64_t seed, int n) {
  elastic::Rng rng(seed);
  std::vector<double> amp(4), phase(4);
  for (int k = 0; k < 4; ++k) {
    amp[k] = std::abs(rng.gaussian()) * 0.18 / (k + 1);
    phase[k] = rng.uniform(0.0, kTau);
  }
  DiscreteCurve c;
  c.closed = true;
  c.vertices.resize(n);
  for (int v = 0; v < n; ++v) {
    const double t = kTau * v / n;
    double r = 1.0;
    for (int k = 0; k < 4; ++k) r += amp[k] * std::cos((k + 2) * t + phase[k]);
    c.vertices[v] = std::polar(r, t);
  }
  return c;
}

/// Random per-vertex displacement field with O(1) smooth variation.
inline std::vector<Complex> random_field(std::uint64_t seed, int n) {
  elastic::Rng rng(seed);
  std::vector<double> ar(4), ai(4), br(4), bi(4);
  for (int k = 0; k < 4; ++k) {
    ar[k] = rng.gaussian() / (k + 1);
    ai[k] = rng.gaussian() / (k + 1);
    br[k] = rng.gaussian() / (k + 1);
    bi[k] = rng.gaussian() / (k + 1);
  }
  std::vector<Complex> field(n);
  for (int v = 0; v < n; ++v) {
    const double t = static_cast<double>(v) / n;
    double x = 0.0, y = 0.0;
    for (int k = 0; k < 4; ++k) {
      x += ar[k] * std::cos(kTau * (k + 1) * t) + br[k] * std::sin(kTau * (k + 1) * t);
      y += ai[k] * std::cos(kTau * (k + 1) * t) + bi[k] * std::sin(kTau * (k + 1) * t);
    }
    field[v] = Complex(x, y);
  }
  return field;
}

inline double max_vertex_error(const DiscreteCurve& a, const DiscreteCurve& b) {
  double err = 0.0;
  for (int i = 0; i < a.vertex_count(); ++i)
    err = std::max(err, std::abs(a.vertices[i] - b.vertices[i]));
  return err;
}

inline double hausdorff(const DiscreteCurve& a, const DiscreteCurve& b) {
  const auto one_sided = [](const DiscreteCurve& p, const DiscreteCurve& q) {
    double worst = 0.0;
    for (const Complex& u : p.vertices) {
      double best = 1e300;
      for (const Complex& v : q.vertices) best = std::min(best, std::abs(u - v));
      worst = std::max(worst, best);
    }
    return worst;
  };
  return std::max(one_sided(a, b), one_sided(b, a));
}

}  // namespace testsupport
