#include <doctest.h>

#include <cmath>
#include <complex>

#include "elastic/fab.hpp"
#include "elastic/rng.hpp"
#include "support/test_curves.hpp"

using namespace elastic;
using namespace testsupport;

namespace {

// Independent SRVF: q = c' / sqrt(|c'|) per edge, oracle for (a,b) = (1,1/2).
std::vector<Complex> srvf_oracle(const DiscreteCurve& c) {
  const int n = c.vertex_count();
  const int m = c.edge_count();
  std::vector<Complex> q(m);
  for (int i = 0; i < m; ++i) {
    const Complex deriv =
        (c.vertices[(i + 1) % n] - c.vertices[i]) * static_cast<double>(m);
    q[i] = deriv / std::sqrt(std::abs(deriv));
  }
  return q;
}

// Random image with smooth phases in the invertible range.
FabImage random_invertible_image(std::uint64_t seed, int m, double a, double b) {
  Rng rng(seed);
  FabImage image;
  image.a = a;
  image.b = b;
  image.cell_widths.assign(m, 1.0 / m);
  image.samples.resize(m);
  double phase = rng.uniform(-0.4, 0.4);
  for (int i = 0; i < m; ++i) {
    phase += rng.uniform(-0.08, 0.08);
    image.samples[i] = std::polar(0.5 + rng.uniform(), phase);
  }
  return image;
}

}  // namespace

TEST_SUITE_BEGIN("fab");

TEST_CASE("forward image of a unit-speed horizontal segment is the constant 2b") {
  const DiscreteCurve seg = segment(Complex(0, 0), Complex(1, 0), 11);
  for (const double b : {0.5, 1.0, 0.8}) {
    const FabImage q = fab_forward(seg, 1.0, b);
    for (const Complex& s : q.samples) CHECK(std::abs(s - Complex(2 * b, 0)) < 1e-13);
  }
}

TEST_CASE("forward image of a vertical segment at (1, 1/2) is the constant i") {
  const DiscreteCurve seg = segment(Complex(0, 0), Complex(0, 1), 11);
  const FabImage q = fab_forward(seg, 1.0, 0.5);
  for (const Complex& s : q.samples) CHECK(std::abs(s - Complex(0, 1)) < 1e-13);
}

TEST_CASE("forward image matches an independent SRVF at (1, 1/2)") {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const DiscreteCurve c = random_open_curve(seed, 60);
    const FabImage q = fab_forward(c, 1.0, 0.5);
    const auto oracle = srvf_oracle(c);
    for (int i = 0; i < q.cell_count(); ++i)
      CHECK(std::abs(q.samples[i] - oracle[i]) < 1e-12);
  }
}

TEST_CASE("forward at (1,1) matches the half-angle transform scale") {
  const DiscreteCurve c = random_open_curve(9, 40);
  const FabImage q = fab_forward(c, 1.0, 1.0);
  const int m = c.edge_count();
  const auto theta = unwrapped_edge_angles(c);
  for (int i = 0; i < m; ++i) {
    const double speed = std::abs(c.vertices[i + 1] - c.vertices[i]) * m;
    const Complex expected = 2.0 * std::sqrt(speed) * std::polar(1.0, 0.5 * theta[i]);
    CHECK(std::abs(q.samples[i] - expected) < 1e-12);
  }
}

TEST_CASE("forward is translation invariant") {
  // exact up to the rounding of the translated vertices themselves
  const DiscreteCurve c = random_open_curve(4, 50);
  const DiscreteCurve moved = translated(c, Complex(13.25, -7.5));
  const FabImage q0 = fab_forward(c, 1.0, 0.8);
  const FabImage q1 = fab_forward(moved, 1.0, 0.8);
  for (int i = 0; i < q0.cell_count(); ++i)
    CHECK(std::abs(q0.samples[i] - q1.samples[i]) < 1e-12);
}

TEST_CASE("forward is rotation equivariant with the scaled angle") {
  for (const double alpha : {kTau / 14.0, kTau / 4.0}) {  // pi/7 and pi/2
    for (const auto ab : {std::pair{1.0, 0.5}, std::pair{1.0, 0.8}}) {
      const DiscreteCurve c = random_open_curve(5, 50);
      const FabImage q0 = fab_forward(c, ab.first, ab.second);
      const FabImage q1 = fab_forward(rotated(c, alpha), ab.first, ab.second);
      const Complex factor = std::polar(1.0, alpha * ab.first / (2.0 * ab.second));
      for (int i = 0; i < q0.cell_count(); ++i)
        CHECK(std::abs(q1.samples[i] - factor * q0.samples[i]) < 1e-12);
    }
  }
}

TEST_CASE("inverse of the constant image 2b is the unit-speed horizontal segment") {
  FabImage image;
  image.a = 1.0;
  image.b = 0.5;
  image.cell_widths.assign(10, 0.1);
  image.samples.assign(10, Complex(1.0, 0.0));  // 2b = 1
  const DiscreteCurve c = fab_inverse(image, Complex(0, 0));
  REQUIRE(c.vertex_count() == 11);
  for (int i = 0; i <= 10; ++i)
    CHECK(std::abs(c.vertices[i] - Complex(0.1 * i, 0.0)) < 1e-13);
}

TEST_CASE("inverse . forward restores the curve through the basepoint") {
  const double combos[4][2] = {{1.0, 0.5}, {1.0, 1.0}, {1.0, 0.8}, {2.0, 0.3}};
  for (const auto& ab : combos) {
    const DiscreteCurve c = random_open_curve(31, 80);
    const FabImage q = fab_forward(c, ab[0], ab[1]);
    const DiscreteCurve back = fab_inverse(q, c.vertices[0]);
    REQUIRE(back.vertex_count() == c.vertex_count());
    CHECK(max_vertex_error(c, back) < 1e-10);
  }
}

TEST_CASE("inverse . forward on a closed curve returns to the start") {
  const DiscreteCurve c = random_closed_curve(8, 64);
  const FabImage q = fab_forward(c, 1.0, 0.5);
  const DiscreteCurve back = fab_inverse(q, c.vertices[0]);
  REQUIRE(back.vertex_count() == 65);
  CHECK(max_vertex_error(cut_open(c, 0), back) < 1e-10);
  CHECK(std::abs(back.vertices[64] - back.vertices[0]) < 1e-12);
}

TEST_CASE("forward . inverse reproduces random nonvanishing images") {
  const double combos[3][2] = {{1.0, 0.5}, {1.0, 0.8}, {2.0, 0.3}};
  for (const auto& ab : combos) {
    const FabImage image = random_invertible_image(17, 40, ab[0], ab[1]);
    const DiscreteCurve c = fab_inverse(image, Complex(1, 2));
    const FabImage again = fab_forward(c, ab[0], ab[1]);
    for (int i = 0; i < image.cell_count(); ++i)
      CHECK(std::abs(again.samples[i] - image.samples[i]) < 1e-10);
  }
}

TEST_CASE("inverse rejects zero samples") {
  FabImage image;
  image.cell_widths.assign(4, 0.25);
  image.samples = {Complex(1, 0), Complex(0, 0), Complex(1, 0), Complex(1, 0)};
  CHECK_THROWS_AS(fab_inverse(image, Complex(0, 0)), ZeroSample);
}

TEST_CASE("l2_distance of an image to itself is zero") {
  const FabImage q = fab_forward(random_open_curve(2, 30), 1, 0.5);
  CHECK(l2_distance(q, q) == 0.0);
}

TEST_CASE("l2_distance between perpendicular unit-speed segments is analytic") {
  const DiscreteCurve h = segment(Complex(0, 0), Complex(1, 0), 21);
  const DiscreteCurve v = segment(Complex(0, 0), Complex(0, 1), 21);
  for (const auto ab : {std::pair{1.0, 0.5}, std::pair{1.0, 0.8}, std::pair{2.0, 0.3}}) {
    const double a = ab.first, b = ab.second;
    const double expected =
        std::sqrt(8.0 * b * b * (1.0 - std::cos(kTau / 2 * a / (4.0 * b))));
    const double got = l2_distance(fab_forward(h, a, b), fab_forward(v, a, b));
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
  }
  // at (1, 1/2) the value is sqrt(2)
  const double srvf = l2_distance(fab_forward(h, 1, 0.5), fab_forward(v, 1, 0.5));
  CHECK(srvf == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("l2_distance equals an independent cell-by-cell summation") {
  const FabImage q0 = fab_forward(random_open_curve(41, 50), 1, 0.5);
  const FabImage q1 = fab_forward(random_open_curve(42, 50), 1, 0.5);
  double sum = 0.0;
  for (int i = 0; i < q0.cell_count(); ++i) {
    const double dx = q0.samples[i].real() - q1.samples[i].real();
    const double dy = q0.samples[i].imag() - q1.samples[i].imag();
    sum += q0.cell_widths[i] * (dx * dx + dy * dy);
  }
  CHECK(std::abs(l2_distance(q0, q1) - std::sqrt(sum)) < 1e-14);
}

TEST_CASE("l2_distance rejects mismatched parameters") {
  const DiscreteCurve c = random_open_curve(1, 20);
  const FabImage qa = fab_forward(c, 1.0, 0.5);
  const FabImage qb = fab_forward(c, 1.0, 0.8);
  CHECK_THROWS_AS(l2_distance(qa, qb), ParamMismatch);
  const FabImage qc = fab_forward(random_open_curve(1, 21), 1.0, 0.5);
  CHECK_THROWS_AS(l2_distance(qa, qc), ParamMismatch);
}

TEST_CASE("l2_distance is symmetric and satisfies the triangle inequality") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const FabImage x = fab_forward(random_open_curve(50 + seed, 40), 1, 0.5);
    const FabImage y = fab_forward(random_open_curve(60 + seed, 40), 1, 0.5);
    const FabImage z = fab_forward(random_open_curve(70 + seed, 40), 1, 0.5);
    CHECK(std::abs(l2_distance(x, y) - l2_distance(y, x)) < 1e-12);
    CHECK(l2_distance(x, z) <= l2_distance(x, y) + l2_distance(y, z) + 1e-12);
  }
}

TEST_CASE("geodesic endpoints recover the input curves") {
  const DiscreteCurve c0 = random_open_curve(81, 60);
  const DiscreteCurve c1 = translated(random_open_curve(82, 60), Complex(0.5, 0.25));
  const auto path = geodesic(c0, c1, 1.0, 0.8, {0.0, 1.0});
  REQUIRE(path.size() == 2);
  CHECK(max_vertex_error(path[0], c0) < 1e-10);
  CHECK(max_vertex_error(path[1], c1) < 1e-10);
}

TEST_CASE("geodesic from a curve to itself is constant") {
  const DiscreteCurve c = random_open_curve(83, 40);
  const auto path = geodesic(c, c, 1.0, 0.5, {0.0, 0.25, 0.5, 0.75, 1.0});
  for (const DiscreteCurve& p : path) CHECK(max_vertex_error(p, c) < 1e-10);
}

TEST_CASE("geodesic midpoint between perpendicular segments is analytic") {
  // Images are the constants 1 and i at (1, 1/2); the midpoint image is
  // (1+i)/2, a segment at angle pi/4 with speed 1/2.
  const DiscreteCurve h = segment(Complex(0, 0), Complex(1, 0), 21);
  const DiscreteCurve v = segment(Complex(0, 0), Complex(0, 1), 21);
  const auto path = geodesic(h, v, 1.0, 0.5, {0.5});
  REQUIRE(path.size() == 1);
  const DiscreteCurve& mid = path[0];
  const Complex endpoint = 0.5 * std::polar(1.0, kTau / 8);
  CHECK(std::abs(mid.vertices.back() - endpoint) < 1e-12);
  CHECK(polygonal_length(mid) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("geodesic reports zero crossings with cell and t") {
  const DiscreteCurve right = segment(Complex(0, 0), Complex(1, 0), 11);
  const DiscreteCurve left = segment(Complex(0, 0), Complex(-1, 0), 11);
  // at (1, 1/2) the images are 1 and -1; the midpoint image vanishes
  try {
    geodesic(right, left, 1.0, 0.5, {0.5});
    FAIL("expected ZeroCrossing");
  } catch (const ZeroCrossing& zc) {
    CHECK(zc.t == 0.5);
    CHECK(zc.cell >= 0);
  }
}

TEST_SUITE_END();
