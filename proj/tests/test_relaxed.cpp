#include <doctest.h>

#include <cmath>

#include "elastic/exact.hpp"
#include "elastic/fab.hpp"
#include "elastic/relaxed.hpp"
#include "support/test_curves.hpp"

using namespace elastic;
using namespace testsupport;

namespace {

RelaxedConfig config_for(const DiscreteCurve& target, double lambda,
                         double a = 1.0, double b = 0.5) {
  RelaxedConfig cfg;
  cfg.a = a;
  cfg.b = b;
  cfg.lambda = lambda;
  cfg.kernel = make_default_kernel(target, DirectionKernel::Binet);
  return cfg;
}

}  // namespace

TEST_SUITE_BEGIN("relaxed");

TEST_CASE("objective vanishes when everything coincides") {
  const DiscreteCurve c = random_closed_curve(1, 40);
  const RelaxedConfig cfg = config_for(c, 10.0);
  CHECK(objective(c, 0.0, c, c, cfg) < 1e-12);
}

TEST_CASE("objective reduces to the fidelity term on translates of the source") {
  // the elastic term is translation invariant, so it contributes nothing
  const DiscreteCurve c0 = random_closed_curve(2, 40);
  const DiscreteCurve c1 = random_closed_curve(3, 40);
  const RelaxedConfig cfg = config_for(c1, 7.5);
  const DiscreteCurve moved = translated(c0, Complex(0.4, -0.9));
  const double full = objective(moved, 0.0, c0, c1, cfg);
  const double fid = varifold_distance_sq(cfg.kernel, moved, c1);
  CHECK(full == doctest::Approx(cfg.lambda * fid).epsilon(1e-12));
}

TEST_CASE("objective equals the two published terms composed independently") {
  const DiscreteCurve c0 = random_closed_curve(4, 30);
  const DiscreteCurve c1 = random_closed_curve(5, 35);
  const DiscreteCurve c = random_closed_curve(6, 30);
  for (const double alpha : {0.0, 0.6}) {
    RelaxedConfig cfg = config_for(c1, 13.0, 1.0, 0.8);
    const FabImage q0 = fab_forward(c0, cfg.a, cfg.b);
    const FabImage q = fab_forward(c, cfg.a, cfg.b);
    const double elastic = l2_distance(q0, q);
    const double fid = varifold_distance_sq(cfg.kernel, rotated(c, alpha), c1);
    const double expected = elastic * elastic + cfg.lambda * fid;
    CHECK(objective(c, alpha, c0, c1, cfg) ==
          doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("objective gradient matches central finite differences") {
  const DiscreteCurve c0 = random_closed_curve(7, 16);
  const DiscreteCurve c1 = random_closed_curve(8, 20);
  for (const auto ab : {std::pair{1.0, 0.5}, std::pair{1.0, 0.8}}) {
    RelaxedConfig cfg = config_for(c1, 5.0, ab.first, ab.second);
    cfg.optimize_rotation = true;
    const DiscreteCurve c = random_closed_curve(9, 16);
    const double alpha = 0.35;
    const auto [grad, dalpha] = objective_gradient(c, alpha, c0, c1, cfg);

    double scale = 1.0;
    for (const Complex& g : grad) scale = std::max(scale, std::abs(g));

    const double eps = 1e-6;
    for (int i = 0; i < c.vertex_count(); i += 2) {
      for (int axis = 0; axis < 2; ++axis) {
        DiscreteCurve plus = c, minus = c;
        const Complex delta = axis == 0 ? Complex(eps, 0) : Complex(0, eps);
        plus.vertices[i] += delta;
        minus.vertices[i] -= delta;
        const double fd = (objective(plus, alpha, c0, c1, cfg) -
                           objective(minus, alpha, c0, c1, cfg)) /
                          (2.0 * eps);
        const double an = axis == 0 ? grad[i].real() : grad[i].imag();
        CHECK(std::abs(fd - an) / scale < 1e-5);
      }
    }

    const double fd_alpha = (objective(c, alpha + eps, c0, c1, cfg) -
                             objective(c, alpha - eps, c0, c1, cfg)) /
                            (2.0 * eps);
    CHECK(std::abs(fd_alpha - dalpha) / std::max(1.0, std::abs(dalpha)) < 1e-5);
  }
}

TEST_CASE("alpha derivative is stationary for a self match") {
  const DiscreteCurve c = random_closed_curve(10, 24);
  RelaxedConfig cfg = config_for(c, 3.0);
  cfg.optimize_rotation = true;
  const auto [grad, dalpha] = objective_gradient(c, 0.0, c, c, cfg);
  CHECK(std::abs(dalpha) < 1e-10);
}

TEST_CASE("matching a curve to itself stays put") {
  const DiscreteCurve c = random_closed_curve(11, 40);
  RelaxedConfig cfg = config_for(c, 10.0);
  const MatchResult res = relaxed_match(c, c, cfg);
  CHECK(res.converged);
  CHECK(res.elastic_distance < 1e-6);
  CHECK(res.fidelity < 1e-8);
  CHECK(res.objective_value ==
        doctest::Approx(res.elastic_distance * res.elastic_distance +
                        cfg.lambda * res.fidelity)
            .epsilon(1e-10));
}

TEST_CASE("gradient norm at a converged minimizer is below the tolerance") {
  const DiscreteCurve c0 = resample_uniform(circle(100), 60);
  const DiscreteCurve c1 = resample_uniform(ellipse(100, 1.15, 0.85), 60);
  RelaxedConfig cfg = config_for(c1, 20.0);
  cfg.init = InitMode::Target;
  const MatchResult res = relaxed_match(c0, c1, cfg);
  REQUIRE(res.converged);
  const auto [grad, dalpha] = objective_gradient(res.end_curve, res.rotation,
                                                 c0, c1, cfg);
  double gnorm = 0.0;
  for (const Complex& g : grad)
    gnorm = std::max({gnorm, std::abs(g.real()), std::abs(g.imag())});
  const double tol = cfg.grad_tol * (1.0 + res.objective_value);
  CHECK(gnorm < 10.0 * tol);  // same point the solver certified
}

TEST_CASE("translation equivariance of the matched distance") {
  const DiscreteCurve c0 = resample_uniform(circle(80), 50);
  const DiscreteCurve c1 = resample_uniform(ellipse(80, 1.2, 0.8), 50);
  RelaxedConfig cfg = config_for(c1, 20.0);
  cfg.init = InitMode::Target;
  cfg.grad_tol = 1e-9;
  cfg.max_iter = 2000;
  const double base = relaxed_match(c0, c1, cfg).elastic_distance;

  const Complex z(2.75, -3.5);
  RelaxedConfig cfg_moved = cfg;
  cfg_moved.kernel = make_default_kernel(translated(c1, z), DirectionKernel::Binet);
  const double moved =
      relaxed_match(translated(c0, z), translated(c1, z), cfg_moved).elastic_distance;
  CHECK(std::abs(base - moved) < 1e-8);
}

TEST_CASE("rotation quotient recovers the unrotated distance") {
  const DiscreteCurve c0 = resample_uniform(circle(80), 50);
  const DiscreteCurve c1 = resample_uniform(ellipse(80, 1.25, 0.8), 50);
  RelaxedConfig cfg = config_for(c1, 20.0);
  cfg.init = InitMode::Target;
  cfg.optimize_rotation = true;
  const double base = relaxed_match(c0, c1, cfg).elastic_distance;

  const double beta = kTau / 12.0;  // pi/6
  const MatchResult res = relaxed_match(c0, rotated(c1, beta), cfg);
  CHECK(std::abs(res.elastic_distance - base) / base < 0.02);
}

TEST_CASE("lambda ladder: elastic distance up, fidelity down") {
  const DiscreteCurve c0 = resample_uniform(circle(80), 50);
  const DiscreteCurve c1 = resample_uniform(ellipse(80, 1.3, 0.75), 50);
  double prev_elastic = -1.0;
  double prev_fidelity = 1e300;
  for (const double lambda : {10.0, 20.0, 1000.0}) {
    RelaxedConfig cfg = config_for(c1, lambda);
    cfg.init = InitMode::Target;
    cfg.continuation = lambda > 100.0;
    const MatchResult res = relaxed_match(c0, c1, cfg);
    CHECK(res.elastic_distance >= prev_elastic - 1e-9);
    CHECK(res.fidelity <= prev_fidelity + 1e-9);
    prev_elastic = res.elastic_distance;
    prev_fidelity = res.fidelity;
  }
}

TEST_CASE("custom init and parameter checks") {
  const DiscreteCurve c0 = random_closed_curve(12, 30);
  const DiscreteCurve c1 = random_closed_curve(13, 30);
  RelaxedConfig cfg = config_for(c1, 1.0);
  cfg.lambda = -1.0;
  CHECK_THROWS_AS(relaxed_match(c0, c1, cfg), ParamMismatch);

  cfg.lambda = 1.0;
  cfg.init = InitMode::Custom;
  cfg.custom_init = random_closed_curve(14, 45);  // resampled to 30 internally
  const MatchResult res = relaxed_match(c0, c1, cfg);
  CHECK(res.end_curve.vertex_count() == 30);
}

TEST_SUITE_END();
