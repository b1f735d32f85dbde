#include "cli/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elastic/errors.hpp"
#include "elastic/rng.hpp"

namespace elastic::cli {

namespace {

double dist_sq(const double* a, const double* b, int dim) {
  double s = 0.0;
  for (int d = 0; d < dim; ++d) {
    const double diff = a[d] - b[d];
    s += diff * diff;
  }
  return s;
}

KmeansResult lloyd_once(const std::vector<double>& pts, int n, int dim, int k,
                        Rng& rng) {
  // k-means++ seeding
  std::vector<double> centers(static_cast<std::size_t>(k) * dim);
  std::vector<double> best_d(n, std::numeric_limits<double>::infinity());
  int first = static_cast<int>(rng.uniform() * n) % n;
  std::copy_n(&pts[static_cast<std::size_t>(first) * dim], dim, centers.begin());
  for (int c = 1; c < k; ++c) {
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
      best_d[i] = std::min(best_d[i], dist_sq(&pts[static_cast<std::size_t>(i) * dim],
                                              &centers[static_cast<std::size_t>(c - 1) * dim], dim));
      total += best_d[i];
    }
    double target = rng.uniform() * total;
    int chosen = n - 1;
    for (int i = 0; i < n; ++i) {
      target -= best_d[i];
      if (target <= 0.0) {
        chosen = i;
        break;
      }
    }
    std::copy_n(&pts[static_cast<std::size_t>(chosen) * dim], dim,
                &centers[static_cast<std::size_t>(c) * dim]);
  }

  KmeansResult result;
  result.assignment.assign(n, -1);
  std::vector<double> sums(static_cast<std::size_t>(k) * dim);
  std::vector<int> counts(k);
  for (int iter = 0; iter < 100; ++iter) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best = 0;
      double bd = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d = dist_sq(&pts[static_cast<std::size_t>(i) * dim],
                                 &centers[static_cast<std::size_t>(c) * dim], dim);
        if (d < bd) {
          bd = d;
          best = c;
        }
      }
      if (result.assignment[i] != best) {
        result.assignment[i] = best;
        changed = true;
      }
    }
    if (!changed && iter > 0) break;

    std::fill(sums.begin(), sums.end(), 0.0);
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < n; ++i) {
      const int c = result.assignment[i];
      ++counts[c];
      for (int d = 0; d < dim; ++d)
        sums[static_cast<std::size_t>(c) * dim + d] +=
            pts[static_cast<std::size_t>(i) * dim + d];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] == 0) continue;  // empty cluster keeps its center
      for (int d = 0; d < dim; ++d)
        centers[static_cast<std::size_t>(c) * dim + d] =
            sums[static_cast<std::size_t>(c) * dim + d] / counts[c];
    }
  }

  result.inertia = 0.0;
  for (int i = 0; i < n; ++i)
    result.inertia += dist_sq(&pts[static_cast<std::size_t>(i) * dim],
                              &centers[static_cast<std::size_t>(result.assignment[i]) * dim],
                              dim);
  return result;
}

}  // namespace

KmeansResult kmeans(const std::vector<double>& points, int n, int dim, int k,
                    int restarts, std::uint64_t seed) {
  if (k < 1 || k > n) throw Error("kmeans needs 1 <= k <= n");
  KmeansResult best;
  best.inertia = std::numeric_limits<double>::infinity();
  for (int r = 0; r < restarts; ++r) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
    KmeansResult run = lloyd_once(points, n, dim, k, rng);
    if (run.inertia < best.inertia) best = std::move(run);
  }
  return best;
}

double silhouette(const std::vector<double>& points, int n, int dim,
                  const std::vector<int>& assignment, int k) {
  std::vector<int> counts(k, 0);
  for (int i = 0; i < n; ++i) ++counts[assignment[i]];

  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const int own = assignment[i];
    if (counts[own] <= 1) continue;  // singleton scores 0

    std::vector<double> mean_to(k, 0.0);
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      mean_to[assignment[j]] += std::sqrt(
          dist_sq(&points[static_cast<std::size_t>(i) * dim],
                  &points[static_cast<std::size_t>(j) * dim], dim));
    }
    const double a = mean_to[own] / (counts[own] - 1);
    double b = std::numeric_limits<double>::infinity();
    for (int c = 0; c < k; ++c) {
      if (c == own || counts[c] == 0) continue;
      b = std::min(b, mean_to[c] / counts[c]);
    }
    if (std::isfinite(b)) total += (b - a) / std::max(a, b);
  }
  return total / n;
}

}  // namespace elastic::cli
