#include "elastic/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "elastic/parallel.hpp"

namespace elastic {

DistanceMatrix pairwise_distances(const std::vector<DiscreteCurve>& curves,
                                  const std::vector<std::string>& labels,
                                  const PairwiseConfig& cfg) {
  const int n = static_cast<int>(curves.size());
  if (n < 2) throw Error("need at least 2 curves");
  if (labels.size() != curves.size())
    throw DimensionMismatch("one label per curve required");

  DistanceMatrix matrix;
  matrix.labels = labels;
  matrix.mode = cfg.mode;
  matrix.values.assign(static_cast<std::size_t>(n) * n, 0.0);

  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  std::vector<double> dist(pairs.size(), 0.0);
  std::vector<std::uint8_t> failed(pairs.size(), 0);
  parallel_for(static_cast<int>(pairs.size()), cfg.threads, [&](int k) {
    const auto [i, j] = pairs[k];
    if (cfg.mode == DistanceMode::Exact) {
      dist[k] = exact_distance(curves[i], curves[j], cfg.exact).elastic_distance;
    } else {
      const MatchResult r = relaxed_match(curves[i], curves[j], cfg.relaxed);
      dist[k] = r.elastic_distance;
      failed[k] = r.termination == Termination::LineSearchFailure ? 1 : 0;
    }
  });

  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    matrix.at(i, j) = dist[k];
    matrix.at(j, i) = dist[k];
    if (failed[k]) matrix.failures.emplace_back(i, j);
  }
  return matrix;
}

EigenDecomposition jacobi_eigen_symmetric(std::vector<double> a, int n) {
  auto at = [&a, n](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * n + j];
  };

  std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
  for (int i = 0; i < n; ++i) v[i][i] = 1.0;  // v[k] accumulates eigenvector k

  double frob = 0.0;
  for (double x : a) frob += x * x;
  const double tol = 1e-12 * std::max(1.0, std::sqrt(frob));

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(i, j) * at(i, j);
    if (std::sqrt(off) < tol) break;

    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (int k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vpk = v[p][k], vqk = v[q][k];
          v[p][k] = c * vpk - s * vqk;
          v[q][k] = s * vpk + c * vqk;
        }
      }
    }
  }

  EigenDecomposition out;
  out.values.resize(n);
  for (int i = 0; i < n; ++i) out.values[i] = at(i, i);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return out.values[x] > out.values[y]; });
  std::vector<double> sorted_values(n);
  out.vectors.resize(n);
  for (int k = 0; k < n; ++k) {
    sorted_values[k] = out.values[order[k]];
    out.vectors[k] = v[order[k]];
  }
  out.values = std::move(sorted_values);
  return out;
}

MdsResult classical_mds(const DistanceMatrix& matrix, int dim) {
  const int n = matrix.size();
  if (dim < 1 || dim > n - 1) throw ParamMismatch("mds needs 1 <= dim <= n-1");

  // B = -1/2 J D^2 J via row/column/grand means of squared distances.
  std::vector<double> sq(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sq[static_cast<std::size_t>(i) * n + j] = matrix.at(i, j) * matrix.at(i, j);

  std::vector<double> row_mean(n, 0.0);
  double grand = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) row_mean[i] += sq[static_cast<std::size_t>(i) * n + j];
    row_mean[i] /= n;
    grand += row_mean[i];
  }
  grand /= n;

  std::vector<double> b(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      b[static_cast<std::size_t>(i) * n + j] =
          -0.5 * (sq[static_cast<std::size_t>(i) * n + j] - row_mean[i] -
                  row_mean[j] + grand);

  const EigenDecomposition eig = jacobi_eigen_symmetric(std::move(b), n);

  MdsResult out;
  out.eigenvalues = eig.values;
  out.coords.assign(static_cast<std::size_t>(n) * dim, 0.0);
  for (int k = 0; k < dim; ++k) {
    if (!(eig.values[k] > 0.0)) {
      ++out.padded_columns;  // non-Euclidean distance data; column stays zero
      continue;
    }
    const double scale = std::sqrt(eig.values[k]);
    // Sign convention: the column's largest-magnitude entry is positive.
    int arg_max = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(eig.vectors[k][i]) > std::abs(eig.vectors[k][arg_max])) arg_max = i;
    const double sign = eig.vectors[k][arg_max] < 0.0 ? -1.0 : 1.0;
    for (int i = 0; i < n; ++i)
      out.coords[static_cast<std::size_t>(i) * dim + k] =
          sign * scale * eig.vectors[k][i];
  }
  return out;
}

}  // namespace elastic
