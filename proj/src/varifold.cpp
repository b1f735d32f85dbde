#include "elastic/varifold.hpp"

#include <algorithm>
#include <cmath>

namespace elastic {

namespace {
inline double dot(Complex u, Complex v) {
  return u.real() * v.real() + u.imag() * v.imag();
}
// Guards rounding outside the sphere product's domain.
inline double clamp_unit(double t) { return std::clamp(t, -1.0, 1.0); }
}  // namespace

double VarifoldKernel::rho_from_sq(double r_sq) const {
  return std::exp(-r_sq / (2.0 * sigma_pos * sigma_pos));
}

double VarifoldKernel::gamma(double t) const {
  switch (direction) {
    case DirectionKernel::Current:
      return t;
    case DirectionKernel::Binet:
      return t * t;
    case DirectionKernel::OrientedGaussian:
      return std::exp(2.0 * (t - 1.0) / (sigma_dir * sigma_dir));
  }
  return 0.0;
}

double VarifoldKernel::gamma_prime(double t) const {
  switch (direction) {
    case DirectionKernel::Current:
      return 1.0;
    case DirectionKernel::Binet:
      return 2.0 * t;
    case DirectionKernel::OrientedGaussian:
      return 2.0 / (sigma_dir * sigma_dir) *
             std::exp(2.0 * (t - 1.0) / (sigma_dir * sigma_dir));
  }
  return 0.0;
}

VarifoldKernel make_default_kernel(const DiscreteCurve& target,
                                   DirectionKernel direction, double sigma_dir) {
  VarifoldKernel kernel;
  kernel.direction = direction;
  kernel.sigma_pos = 0.2 * bounding_box_diagonal(target);
  kernel.sigma_dir = sigma_dir;
  return kernel;
}

DiscreteVarifold curve_to_varifold(const DiscreteCurve& curve) {
  const EdgeFrame frame = edge_frame(curve);
  DiscreteVarifold v;
  v.weights = frame.lengths;
  v.positions = frame.midpoints;
  v.directions = frame.tangents;
  return v;
}

double varifold_inner(const VarifoldKernel& kernel, const DiscreteVarifold& v1,
                      const DiscreteVarifold& v2) {
  double sum = 0.0;
  for (int i = 0; i < v1.size(); ++i) {
    const double wi = v1.weights[i];
    const Complex xi = v1.positions[i];
    const Complex ui = v1.directions[i];
    double row = 0.0;
    for (int j = 0; j < v2.size(); ++j) {
      const double r_sq = std::norm(xi - v2.positions[j]);
      const double t = clamp_unit(dot(ui, v2.directions[j]));
      row += v2.weights[j] * kernel.rho_from_sq(r_sq) * kernel.gamma(t);
    }
    sum += wi * row;
  }
  return sum;
}

double varifold_distance_sq(const VarifoldKernel& kernel, const DiscreteCurve& c1,
                            const DiscreteCurve& c2) {
  const DiscreteVarifold v1 = curve_to_varifold(c1);
  const DiscreteVarifold v2 = curve_to_varifold(c2);
  const double d = varifold_inner(kernel, v1, v1) -
                   2.0 * varifold_inner(kernel, v1, v2) +
                   varifold_inner(kernel, v2, v2);
  if (d < -1e-10) throw NegativeNorm(d);
  return std::max(d, 0.0);
}

double varifold_inner_with_gradient(const VarifoldKernel& kernel,
                                    const DiscreteCurve& curve,
                                    const DiscreteVarifold& fixed,
                                    std::vector<Complex>& grad) {
  const int n = curve.vertex_count();
  const EdgeFrame frame = edge_frame(curve);
  const int m = frame.size();
  const double inv_sig_sq = 1.0 / (kernel.sigma_pos * kernel.sigma_pos);

  grad.assign(n, Complex(0.0, 0.0));
  double total = 0.0;
  for (int i = 0; i < m; ++i) {
    const double li = frame.lengths[i];
    const Complex xi = frame.midpoints[i];
    const Complex ui = frame.tangents[i];

    double g_len = 0.0;       // d/dl_i
    Complex g_pos(0.0, 0.0);  // d/dx_i
    Complex g_dir(0.0, 0.0);  // d/du_i, before tangent-plane projection
    for (int j = 0; j < fixed.size(); ++j) {
      const Complex diff = xi - fixed.positions[j];
      const double rho = kernel.rho_from_sq(std::norm(diff));
      const double t = clamp_unit(dot(ui, fixed.directions[j]));
      const double gam = kernel.gamma(t);
      const double wj = fixed.weights[j];
      total += li * wj * rho * gam;
      g_len += wj * rho * gam;
      g_pos += (-inv_sig_sq * li * wj * gam * rho) * diff;
      g_dir += (li * wj * rho * kernel.gamma_prime(t)) * fixed.directions[j];
    }

    // Chain rule to the edge vector: l = <e,u>, u = e/l, x = (z_i+z_{i+1})/2.
    const Complex g_dir_proj = g_dir - dot(g_dir, ui) * ui;
    const Complex g_edge = g_len * ui + g_dir_proj / li;
    grad[i] -= g_edge;
    grad[(i + 1) % n] += g_edge;
    grad[i] += 0.5 * g_pos;
    grad[(i + 1) % n] += 0.5 * g_pos;
  }
  return total;
}

std::vector<Complex> varifold_distance_gradient(const VarifoldKernel& kernel,
                                                const DiscreteCurve& c,
                                                const DiscreteCurve& target) {
  const DiscreteVarifold self = curve_to_varifold(c);
  const DiscreteVarifold fixed = curve_to_varifold(target);
  std::vector<Complex> g_self, g_cross;
  varifold_inner_with_gradient(kernel, c, self, g_self);
  varifold_inner_with_gradient(kernel, c, fixed, g_cross);
  std::vector<Complex> grad(c.vertex_count());
  for (int i = 0; i < c.vertex_count(); ++i)
    grad[i] = 2.0 * (g_self[i] - g_cross[i]);
  return grad;
}

}  // namespace elastic
