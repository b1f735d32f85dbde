#pragma once

#include <string>
#include <utility>
#include <vector>

#include "elastic/exact.hpp"
#include "elastic/relaxed.hpp"

namespace elastic {

enum class DistanceMode { Exact, Relaxed };

struct PairwiseConfig {
  DistanceMode mode = DistanceMode::Relaxed;
  ExactMatchConfig exact;
  RelaxedConfig relaxed;
  int threads = 0;  // over pairs; 0 = hardware
};

/// Symmetric pairwise elastic distance matrix with zero diagonal. Each
/// unordered pair is computed once; per-pair solver failures are recorded
/// with the best-found value, the matrix is still returned.
struct DistanceMatrix {
  std::vector<std::string> labels;
  std::vector<double> values;  // n*n row-major
  DistanceMode mode = DistanceMode::Relaxed;
  std::vector<std::pair<int, int>> failures;

  int size() const { return static_cast<int>(labels.size()); }
  double at(int i, int j) const { return values[static_cast<std::size_t>(i) * size() + j]; }
  double& at(int i, int j) { return values[static_cast<std::size_t>(i) * size() + j]; }
};

DistanceMatrix pairwise_distances(const std::vector<DiscreteCurve>& curves,
                                  const std::vector<std::string>& labels,
                                  const PairwiseConfig& cfg);

/// Eigendecomposition of a dense symmetric matrix by cyclic Jacobi
/// rotations, iterated until the off-diagonal Frobenius norm falls below
/// 1e-12 (scaled). Returns eigenvalues in descending order and the matching
/// orthonormal eigenvectors as rows of `vectors` (vectors[k] is the k-th
/// eigenvector).
struct EigenDecomposition {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;
};
EigenDecomposition jacobi_eigen_symmetric(std::vector<double> matrix, int n);

struct MdsResult {
  std::vector<double> coords;  // n x dim, row-major
  std::vector<double> eigenvalues;
  int padded_columns = 0;  // nonzero signals non-Euclidean distance data

  double at(int i, int dim, int k) const {
    return coords[static_cast<std::size_t>(i) * dim + k];
  }
};

/// Classical multidimensional scaling: double-centers the squared distance
/// matrix, eigendecomposes it, and embeds on the top-`dim` eigenvectors
/// scaled by sqrt(max(eigenvalue, 0)). Columns are ordered by descending
/// eigenvalue; each column's largest-magnitude entry is made positive.
/// Non-positive leading eigenvalues yield zero columns and are counted in
/// padded_columns.
MdsResult classical_mds(const DistanceMatrix& matrix, int dim);

}  // namespace elastic
