#pragma once

#include <complex>
#include <cstdint>
#include <utility>
#include <vector>

#include "elastic/errors.hpp"

namespace elastic {

/// Planar points are complex numbers throughout.
using Complex = std::complex<double>;

/// Piecewise-linear immersed planar curve: an ordered list of vertices.
/// Closed curves store N distinct vertices with an implicit closing edge,
/// so edge-indexed quantities have N entries (open curves have N-1).
struct DiscreteCurve {
  std::vector<Complex> vertices;
  bool closed = false;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return closed ? vertex_count() : vertex_count() - 1; }
};

/// Throws Error / DegenerateEdge if the curve violates its invariants
/// (N >= 2, finite vertices, no zero-length edge).
void validate(const DiscreteCurve& curve);

/// Per-edge geometry: lengths, midpoints and unit tangents.
struct EdgeFrame {
  std::vector<double> lengths;
  std::vector<Complex> midpoints;
  std::vector<Complex> tangents;

  int size() const { return static_cast<int>(lengths.size()); }
};

EdgeFrame edge_frame(const DiscreteCurve& curve);

double polygonal_length(const DiscreteCurve& curve);

/// Resamples to n vertices at equal arclength spacing. Endpoints are
/// preserved for open curves, the first vertex for closed ones.
DiscreteCurve resample_uniform(const DiscreteCurve& curve, int n);

/// Discrete first-order metric between two vertex displacement fields:
/// an edge-length-weighted sum of a^2 <D_s h, N><D_s k, N> +
/// b^2 <D_s h, T><D_s k, T>, with D_s taken as a forward difference per
/// edge. Vanishes on constant (translation) fields.
double elastic_metric(const DiscreteCurve& curve, const std::vector<Complex>& h,
                      const std::vector<Complex>& k, double a, double b);

/// Adds i.i.d. zero-mean Gaussian noise of standard deviation `amplitude`
/// to every vertex coordinate, deterministically from `seed`.
DiscreteCurve add_noise(const DiscreteCurve& curve, double amplitude,
                        std::uint64_t seed);

DiscreteCurve translated(const DiscreteCurve& curve, Complex z);
DiscreteCurve rotated(const DiscreteCurve& curve, double alpha);

/// Axis-aligned bounding box as (min corner, max corner).
std::pair<Complex, Complex> bounding_box(const DiscreteCurve& curve);
double bounding_box_diagonal(const DiscreteCurve& curve);

/// Cuts a closed curve open at vertex `seam`, duplicating the seam vertex
/// at the end (N+1 vertices, same geometry).
DiscreteCurve cut_open(const DiscreteCurve& curve, int seam);

/// Rotates a closed curve's vertex list so that vertex `shift` comes first.
DiscreteCurve cyclic_shift(const DiscreteCurve& curve, int shift);

/// Evaluates an open curve at parameter t in [0,1], with vertices placed on
/// the uniform grid i/(N-1).
Complex evaluate_uniform(const DiscreteCurve& curve, double t);

}  // namespace elastic
