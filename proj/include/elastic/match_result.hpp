#pragma once

#include "elastic/curve.hpp"
#include "elastic/lbfgs.hpp"

namespace elastic {

/// Outcome of a matching run (exact or relaxed). The reported
/// objective_value always equals elastic_distance^2 + lambda * fidelity at
/// the returned point (lambda * fidelity is zero for exact matching).
struct MatchResult {
  DiscreteCurve end_curve;
  double elastic_distance = 0.0;  // ||F(c0) - F(end_curve)||_{L2}
  double fidelity = 0.0;          // squared varifold discrepancy to the target
  double rotation = 0.0;          // alpha in [0, 2pi); 0 when not optimized
  double objective_value = 0.0;
  int iterations = 0;
  bool converged = false;
  Termination termination = Termination::GradientTol;
};

}  // namespace elastic
