#pragma once

#include <vector>

#include "elastic/curve.hpp"

namespace elastic {

/// Zonal kernel on the circle, applied to the dot product of unit tangents.
enum class DirectionKernel {
  Current,           // gamma(t) = t (orientation-sensitive, linear)
  Binet,             // gamma(t) = t^2 (orientation-invariant)
  OrientedGaussian,  // gamma(t) = exp(2(t-1)/sigma_dir^2)
};

/// Separable kernel rho(|x-y|) * gamma(u.v) with Gaussian position factor
/// rho(r) = exp(-r^2 / (2 sigma_pos^2)).
struct VarifoldKernel {
  DirectionKernel direction = DirectionKernel::Binet;
  double sigma_pos = 1.0;
  double sigma_dir = 1.0;

  double rho_from_sq(double r_sq) const;
  double gamma(double t) const;
  double gamma_prime(double t) const;
};

/// Kernel with the scale-aware default bandwidth sigma_pos = 0.2 x bounding
/// box diagonal of `target`.
VarifoldKernel make_default_kernel(const DiscreteCurve& target,
                                   DirectionKernel direction,
                                   double sigma_dir = 1.0);

/// Measure-style curve representation: one weighted atom per edge, carrying
/// the edge length, midpoint and unit direction.
struct DiscreteVarifold {
  std::vector<double> weights;
  std::vector<Complex> positions;
  std::vector<Complex> directions;

  int size() const { return static_cast<int>(weights.size()); }
};

DiscreteVarifold curve_to_varifold(const DiscreteCurve& curve);

/// Kernel inner product: sum_ij w_i w_j rho(|x_i - y_j|) gamma(u_i . v_j).
double varifold_inner(const VarifoldKernel& kernel, const DiscreteVarifold& v1,
                      const DiscreteVarifold& v2);

/// Squared kernel discrepancy <v1,v1> - 2<v1,v2> + <v2,v2>, clamped at zero
/// against rounding; throws NegativeNorm below -1e-10.
double varifold_distance_sq(const VarifoldKernel& kernel, const DiscreteCurve& c1,
                            const DiscreteCurve& c2);

/// Gradient of varifold_distance_sq(kernel, c, target) with respect to the
/// vertices of c, through edge weights, midpoints and unit directions.
std::vector<Complex> varifold_distance_gradient(const VarifoldKernel& kernel,
                                                const DiscreteCurve& c,
                                                const DiscreteCurve& target);

/// Inner product <mu_curve, fixed> together with its gradient with respect
/// to the curve's vertices (the fixed measure held constant). Building block
/// for the distance gradient and the matching objective.
double varifold_inner_with_gradient(const VarifoldKernel& kernel,
                                    const DiscreteCurve& curve,
                                    const DiscreteVarifold& fixed,
                                    std::vector<Complex>& grad);

}  // namespace elastic
