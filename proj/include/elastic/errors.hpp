#pragma once

#include <stdexcept>
#include <string>

namespace elastic {

/// Base type for all errors thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two consecutive vertices coincide; the polyline has no tangent there.
struct DegenerateEdge : Error {
  explicit DegenerateEdge(int edge_index)
      : Error("degenerate edge at index " + std::to_string(edge_index)),
        edge(edge_index) {}
  int edge;
};

/// A per-vertex field does not have one entry per curve vertex.
struct DimensionMismatch : Error {
  using Error::Error;
};

/// Two objects that must share parameters (a, b, cell structure, vertex
/// count, open/closed flag) do not.
struct ParamMismatch : Error {
  using Error::Error;
};

/// A transform sample is exactly zero; the inverse is undefined there.
struct ZeroSample : Error {
  explicit ZeroSample(int cell_index)
      : Error("zero transform sample in cell " + std::to_string(cell_index)),
        cell(cell_index) {}
  int cell;
};

/// An interpolated transform image passes through zero in some cell.
struct ZeroCrossing : Error {
  ZeroCrossing(int cell_index, double t_value)
      : Error("geodesic image vanishes in cell " + std::to_string(cell_index) +
              " at t=" + std::to_string(t_value)),
        cell(cell_index),
        t(t_value) {}
  int cell;
  double t;
};

/// Curve has too few vertices for the requested lattice move set.
struct CurveTooSmall : Error {
  using Error::Error;
};

/// A squared kernel norm came out below -1e-10, which signals a
/// non-positive-definite kernel configuration.
struct NegativeNorm : Error {
  explicit NegativeNorm(double v)
      : Error("squared varifold norm is negative: " + std::to_string(v)),
        value(v) {}
  double value;
};

/// Reconstructing a curve from transform samples and transforming it back
/// did not reproduce the input; the image lies outside the invertible set.
struct InverseMismatch : Error {
  using Error::Error;
};

}  // namespace elastic
