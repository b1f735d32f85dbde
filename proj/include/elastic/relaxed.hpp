#pragma once

#include <utility>
#include <vector>

#include "elastic/curve.hpp"
#include "elastic/match_result.hpp"
#include "elastic/varifold.hpp"

namespace elastic {

enum class InitMode { Source, Target, Custom };

struct RelaxedConfig {
  double a = 1.0;
  double b = 0.5;
  double lambda = 1.0;
  VarifoldKernel kernel;
  bool optimize_rotation = false;
  InitMode init = InitMode::Source;
  DiscreteCurve custom_init;  // used when init == Custom
  int max_iter = 500;
  double grad_tol = 1e-6;  // scaled by (1 + |objective at init|)
  int history_size = 10;
  bool continuation = false;  // warm start from a solve at lambda / 10
};

/// Inexact matching functional
///   ||F(c0) - F(c)||^2_{L2} + lambda * D_Var(e^{i alpha} c, c1)^2.
/// c and c0 must share vertex count and closed flag; c1 is free.
double objective(const DiscreteCurve& c, double alpha, const DiscreteCurve& c0,
                 const DiscreteCurve& c1, const RelaxedConfig& cfg);

/// Gradient of the objective with respect to c's vertices, plus the scalar
/// derivative with respect to alpha (meaningful when rotation is optimized).
std::pair<std::vector<Complex>, double> objective_gradient(
    const DiscreteCurve& c, double alpha, const DiscreteCurve& c0,
    const DiscreteCurve& c1, const RelaxedConfig& cfg);

/// Minimizes the objective over the end curve's vertex coordinates (and
/// jointly over alpha when optimize_rotation), starting from cfg.init.
/// The geodesic from c0 to the end curve is available via geodesic().
MatchResult relaxed_match(const DiscreteCurve& c0, const DiscreteCurve& c1,
                          const RelaxedConfig& cfg);

}  // namespace elastic
