#pragma once

#include <vector>

#include "elastic/curve.hpp"

namespace elastic {

/// Sampled image of a curve under the simplifying transform
/// c -> 2b |c'|^{1/2} (c'/|c'|)^{a/(2b)}: one complex sample per edge,
/// piecewise constant on parameter cells. The complex power is taken via a
/// continuously unwrapped turning angle, seeded with the raw atan2 of the
/// first edge, so the image is free of spurious branch jumps. Samples of a
/// regular curve are never zero.
struct FabImage {
  std::vector<Complex> samples;
  std::vector<double> cell_widths;  // positive, sum to 1; uniform by default
  double a = 1.0;
  double b = 0.5;

  int cell_count() const { return static_cast<int>(samples.size()); }
};

/// Per-edge tangent angles, cumulatively unwrapped so consecutive
/// differences lie in (-pi, pi].
std::vector<double> unwrapped_edge_angles(const DiscreteCurve& curve);

FabImage fab_forward(const DiscreteCurve& curve, double a, double b);

/// Inverts the transform by integrating c' = |q|^2/(4b^2) (q/|q|)^{2b/a}
/// from `basepoint`. Always returns an open curve with cell_count()+1
/// vertices; for images of closed curves the last vertex lands back on the
/// first up to rounding. Verifies that transforming the result reproduces
/// the input samples and throws InverseMismatch when the image lies outside
/// the invertible set (e.g. angle increments past the branch cut).
DiscreteCurve fab_inverse(const FabImage& image, Complex basepoint);

/// L2 distance between two images on the same cell structure.
double l2_distance(const FabImage& q0, const FabImage& q1);

/// Geodesic through transform space: the curve at each t is the inverse
/// image of (1-t) q0 + t q1, based at the interpolated basepoints. Closed
/// inputs yield open snapshots (the closure holds only approximately away
/// from the endpoints). Throws ZeroCrossing if the interpolated image
/// vanishes in some cell.
std::vector<DiscreteCurve> geodesic(const DiscreteCurve& c0,
                                    const DiscreteCurve& c1, double a, double b,
                                    const std::vector<double>& t_values);

}  // namespace elastic
