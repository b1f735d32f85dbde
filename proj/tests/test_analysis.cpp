#include <doctest.h>

#include <cmath>

#include "elastic/analysis.hpp"
#include "elastic/rng.hpp"
#include "support/test_curves.hpp"

using namespace elastic;
using namespace testsupport;

namespace {

DistanceMatrix matrix_from(const std::vector<std::vector<double>>& rows) {
  DistanceMatrix m;
  const int n = static_cast<int>(rows.size());
  for (int i = 0; i < n; ++i) m.labels.push_back("p" + std::to_string(i));
  m.values.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_SUITE_BEGIN("analysis");

TEST_CASE("pairwise distances of a duplicated curve are zero") {
  const DiscreteCurve c = resample_uniform(circle(60), 40);
  PairwiseConfig cfg;
  cfg.mode = DistanceMode::Relaxed;
  cfg.relaxed = RelaxedConfig{};
  cfg.relaxed.lambda = 20.0;
  cfg.relaxed.kernel = make_default_kernel(c, DirectionKernel::Binet);
  cfg.threads = 1;
  const DistanceMatrix m = pairwise_distances({c, c}, {"a", "b"}, cfg);
  CHECK(m.at(0, 1) < 1e-6);
  CHECK(m.at(0, 0) == 0.0);
  CHECK(m.at(1, 1) == 0.0);
}

TEST_CASE("pairwise matrix is symmetric by construction") {
  std::vector<DiscreteCurve> curves;
  std::vector<std::string> labels;
  for (int i = 0; i < 3; ++i) {
    curves.push_back(random_open_curve(40 + i, 30));
    labels.push_back("c" + std::to_string(i));
  }
  PairwiseConfig cfg;
  cfg.mode = DistanceMode::Exact;
  cfg.threads = 1;
  const DistanceMatrix m = pairwise_distances(curves, labels, cfg);
  for (int i = 0; i < 3; ++i) {
    CHECK(m.at(i, i) == 0.0);
    for (int j = 0; j < 3; ++j) CHECK(m.at(i, j) == m.at(j, i));
  }
  CHECK(m.at(0, 1) > 0.0);
}

TEST_CASE("parallel and serial pairwise runs agree") {
  std::vector<DiscreteCurve> curves;
  std::vector<std::string> labels;
  for (int i = 0; i < 6; ++i) {
    curves.push_back(random_open_curve(50 + i, 40));
    labels.push_back("c" + std::to_string(i));
  }
  PairwiseConfig serial;
  serial.mode = DistanceMode::Exact;
  serial.threads = 1;
  PairwiseConfig parallel = serial;
  parallel.threads = 4;
  const DistanceMatrix a = pairwise_distances(curves, labels, serial);
  const DistanceMatrix b = pairwise_distances(curves, labels, parallel);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(std::abs(a.at(i, j) - b.at(i, j)) < 1e-12);
}

TEST_CASE("jacobi reconstructs the input matrix") {
  Rng rng(77);
  const int n = 12;
  std::vector<double> m(n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = rng.gaussian();
      m[i * n + j] = v;
      m[j * n + i] = v;
    }
  const EigenDecomposition eig = jacobi_eigen_symmetric(m, n);

  double trace = 0.0, eigsum = 0.0;
  for (int i = 0; i < n; ++i) {
    trace += m[i * n + i];
    eigsum += eig.values[i];
  }
  CHECK(std::abs(trace - eigsum) < 1e-10);

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double rec = 0.0;
      for (int k = 0; k < n; ++k)
        rec += eig.values[k] * eig.vectors[k][i] * eig.vectors[k][j];
      CHECK(std::abs(rec - m[i * n + j]) < 1e-10);
    }
  }
}

TEST_CASE("mds embeds collinear points exactly") {
  // points 0, 1, 3 on a line
  const DistanceMatrix m = matrix_from({{0, 1, 3}, {1, 0, 2}, {3, 2, 0}});
  const MdsResult r = classical_mds(m, 1);
  CHECK(std::abs(std::abs(r.at(0, 1, 0) - r.at(1, 1, 0)) - 1.0) < 1e-10);
  CHECK(std::abs(std::abs(r.at(1, 1, 0) - r.at(2, 1, 0)) - 2.0) < 1e-10);
  CHECK(std::abs(std::abs(r.at(0, 1, 0) - r.at(2, 1, 0)) - 3.0) < 1e-10);
  CHECK(r.padded_columns == 0);
}

TEST_CASE("mds of a zero matrix is the zero embedding") {
  const DistanceMatrix m = matrix_from({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}});
  const MdsResult r = classical_mds(m, 2);
  for (double v : r.coords) CHECK(v == 0.0);
  CHECK(r.padded_columns == 2);
}

TEST_CASE("mds round-trips planar point configurations") {
  Rng rng(123);
  const int n = 10;
  std::vector<std::pair<double, double>> pts(n);
  for (auto& p : pts) p = {rng.uniform(-2, 2), rng.uniform(-2, 2)};

  DistanceMatrix m;
  for (int i = 0; i < n; ++i) m.labels.push_back("p" + std::to_string(i));
  m.values.assign(n * n, 0.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = pts[i].first - pts[j].first;
      const double dy = pts[i].second - pts[j].second;
      m.at(i, j) = std::sqrt(dx * dx + dy * dy);
    }

  const MdsResult r = classical_mds(m, 2);
  CHECK(r.padded_columns == 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double dx = r.at(i, 2, 0) - r.at(j, 2, 0);
      const double dy = r.at(i, 2, 1) - r.at(j, 2, 1);
      CHECK(std::abs(std::sqrt(dx * dx + dy * dy) - m.at(i, j)) < 1e-8);
    }
}

TEST_CASE("mds pads non-Euclidean configurations and warns via the count") {
  // gross triangle-inequality violation forces a negative eigenvalue
  const DistanceMatrix m = matrix_from({{0, 1, 10}, {1, 0, 1}, {10, 1, 0}});
  const MdsResult r = classical_mds(m, 2);
  CHECK(r.padded_columns >= 1);
}

TEST_CASE("mds validates the dimension") {
  const DistanceMatrix m = matrix_from({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(classical_mds(m, 2), ParamMismatch);
}

TEST_SUITE_END();
