#pragma once

#include <cstdint>
#include <vector>

namespace elastic::cli {

struct KmeansResult {
  std::vector<int> assignment;
  double inertia = 0.0;
};

/// Lloyd's algorithm with k-means++ seeding, best of `restarts` runs,
/// deterministic in the seed. `points` is n x dim row-major.
KmeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    int restarts, std::uint64_t seed);

/// Mean silhouette score of a clustering in Euclidean coordinates;
/// singleton clusters score zero.
double silhouette(const std::vector<double>& points, int n, int dim,
                  const std::vector<int>& assignment, int k);

}  // namespace elastic::cli
