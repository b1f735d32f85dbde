#include "elastic/relaxed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elastic/fab.hpp"
#include "elastic/lbfgs.hpp"

namespace elastic {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

inline double dot(Complex u, Complex v) {
  return u.real() * v.real() + u.imag() * v.imag();
}

// Elastic term ||q0 - F(c)||^2 and its gradient with respect to c's
// vertices, differentiating through edge lengths and the unwrapped turning
// angles (locally constant branch offsets drop out).
double elastic_term(const DiscreteCurve& c, const FabImage& q0,
                    std::vector<Complex>* grad) {
  const int n = c.vertex_count();
  const int m = c.edge_count();
  const double a = q0.a, b = q0.b;
  const FabImage q = fab_forward(c, a, b);
  const double width = 1.0 / m;

  double value = 0.0;
  if (grad) grad->assign(n, Complex(0.0, 0.0));
  const EdgeFrame frame = grad ? edge_frame(c) : EdgeFrame{};
  const double power = a / (2.0 * b);
  for (int i = 0; i < m; ++i) {
    const Complex diff = q.samples[i] - q0.samples[i];
    value += width * std::norm(diff);
    if (!grad) continue;
    const Complex g_sample = 2.0 * width * diff;       // d value / d q_i
    const Complex d_len = q.samples[i] / (2.0 * frame.lengths[i]);
    const Complex d_angle = Complex(0.0, power) * q.samples[i];
    const double coeff_len = dot(g_sample, d_len);
    const double coeff_angle = dot(g_sample, d_angle);
    const Complex u = frame.tangents[i];
    const Complex g_edge =
        coeff_len * u + (coeff_angle / frame.lengths[i]) * Complex(0.0, 1.0) * u;
    (*grad)[i] -= g_edge;
    (*grad)[(i + 1) % n] += g_edge;
  }
  return value;
}

// Fidelity term D_Var(e^{i alpha} c, c1)^2 split as <mu_c,mu_c> (rotation
// invariant, evaluated on the unrotated curve) - 2 <mu_{rot c}, mu_{c1}> +
// <mu_{c1}, mu_{c1}>.
struct FidelityEval {
  double value;
  std::vector<Complex> grad;  // with respect to c's vertices
  double alpha_derivative;
};

FidelityEval fidelity_term(const DiscreteCurve& c, double alpha,
                           const DiscreteVarifold& target, double target_self,
                           const VarifoldKernel& kernel, bool want_grad) {
  const int n = c.vertex_count();
  const DiscreteCurve rot = alpha != 0.0 ? rotated(c, alpha) : c;

  FidelityEval out;
  out.alpha_derivative = 0.0;
  if (want_grad) {
    const DiscreteVarifold self = curve_to_varifold(c);
    std::vector<Complex> g_self, g_cross;
    const double self_inner = varifold_inner_with_gradient(kernel, c, self, g_self);
    const double cross = varifold_inner_with_gradient(kernel, rot, target, g_cross);
    out.value = self_inner - 2.0 * cross + target_self;
    out.grad.resize(n);
    const Complex back = std::polar(1.0, -alpha);
    for (int i = 0; i < n; ++i) {
      out.grad[i] = 2.0 * g_self[i] - 2.0 * (back * g_cross[i]);
      out.alpha_derivative +=
          -2.0 * dot(g_cross[i], Complex(0.0, 1.0) * rot.vertices[i]);
    }
  } else {
    const DiscreteVarifold self = curve_to_varifold(c);
    const DiscreteVarifold moved = curve_to_varifold(rot);
    out.value = varifold_inner(kernel, self, self) -
                2.0 * varifold_inner(kernel, moved, target) + target_self;
  }
  out.value = std::max(out.value, 0.0);
  return out;
}

struct Problem {
  const DiscreteCurve* c0;
  const DiscreteCurve* c1;
  RelaxedConfig cfg;
  bool with_alpha;
  int n;
  bool closed;
  FabImage q0;
  DiscreteVarifold target;
  double target_self;

  DiscreteCurve unpack(const std::vector<double>& x) const {
    DiscreteCurve c;
    c.closed = closed;
    c.vertices.resize(n);
    for (int i = 0; i < n; ++i) c.vertices[i] = Complex(x[2 * i], x[2 * i + 1]);
    return c;
  }

  double alpha_of(const std::vector<double>& x) const {
    return with_alpha ? x[2 * n] : 0.0;
  }

  double eval(const std::vector<double>& x, std::vector<double>& grad) const {
    grad.assign(x.size(), 0.0);
    const DiscreteCurve c = unpack(x);
    const double alpha = alpha_of(x);
    try {
      std::vector<Complex> g_elastic;
      const double elastic = elastic_term(c, q0, &g_elastic);
      const FidelityEval fid =
          fidelity_term(c, alpha, target, target_self, cfg.kernel, true);
      for (int i = 0; i < n; ++i) {
        const Complex g = g_elastic[i] + cfg.lambda * fid.grad[i];
        grad[2 * i] = g.real();
        grad[2 * i + 1] = g.imag();
      }
      if (with_alpha) grad[2 * n] = cfg.lambda * fid.alpha_derivative;
      return elastic + cfg.lambda * fid.value;
    } catch (const DegenerateEdge&) {
      // Infeasible trial point; the line search backtracks on +inf.
      return kInf;
    }
  }
};

Problem make_problem(const DiscreteCurve& c0, const DiscreteCurve& c1,
                     const RelaxedConfig& cfg) {
  validate(c0);
  validate(c1);
  if (!(cfg.lambda > 0.0)) throw ParamMismatch("lambda must be positive");
  Problem p;
  p.c0 = &c0;
  p.c1 = &c1;
  p.cfg = cfg;
  p.with_alpha = cfg.optimize_rotation;
  p.n = c0.vertex_count();
  p.closed = c0.closed;
  p.q0 = fab_forward(c0, cfg.a, cfg.b);
  p.target = curve_to_varifold(c1);
  p.target_self = varifold_inner(cfg.kernel, p.target, p.target);
  return p;
}

void check_compatible(const DiscreteCurve& c, const DiscreteCurve& c0) {
  if (c.vertex_count() != c0.vertex_count())
    throw ParamMismatch("end curve and source must share the vertex count");
  if (c.closed != c0.closed)
    throw ParamMismatch("end curve and source must share the closed flag");
}

}  // namespace

double objective(const DiscreteCurve& c, double alpha, const DiscreteCurve& c0,
                 const DiscreteCurve& c1, const RelaxedConfig& cfg) {
  check_compatible(c, c0);
  const Problem p = make_problem(c0, c1, cfg);
  const double elastic = elastic_term(c, p.q0, nullptr);
  const FidelityEval fid =
      fidelity_term(c, alpha, p.target, p.target_self, cfg.kernel, false);
  return elastic + cfg.lambda * fid.value;
}

std::pair<std::vector<Complex>, double> objective_gradient(
    const DiscreteCurve& c, double alpha, const DiscreteCurve& c0,
    const DiscreteCurve& c1, const RelaxedConfig& cfg) {
  check_compatible(c, c0);
  const Problem p = make_problem(c0, c1, cfg);
  std::vector<Complex> g_elastic;
  elastic_term(c, p.q0, &g_elastic);
  const FidelityEval fid =
      fidelity_term(c, alpha, p.target, p.target_self, cfg.kernel, true);
  std::vector<Complex> grad(p.n);
  for (int i = 0; i < p.n; ++i)
    grad[i] = g_elastic[i] + cfg.lambda * fid.grad[i];
  return {std::move(grad), cfg.lambda * fid.alpha_derivative};
}

MatchResult relaxed_match(const DiscreteCurve& c0, const DiscreteCurve& c1,
                          const RelaxedConfig& cfg) {
  Problem p = make_problem(c0, c1, cfg);

  DiscreteCurve init;
  switch (cfg.init) {
    case InitMode::Source:
      init = c0;
      break;
    case InitMode::Target:
      init = resample_uniform(c1, p.n);
      init.closed = p.closed;
      validate(init);
      break;
    case InitMode::Custom:
      init = resample_uniform(cfg.custom_init, p.n);
      init.closed = p.closed;
      validate(init);
      break;
  }

  std::vector<double> x(2 * p.n + (p.with_alpha ? 1 : 0), 0.0);
  for (int i = 0; i < p.n; ++i) {
    x[2 * i] = init.vertices[i].real();
    x[2 * i + 1] = init.vertices[i].imag();
  }
  if (p.with_alpha) {
    // Seed alpha at the best fidelity over a coarse grid; the joint solve
    // then refines from a basin that matches the target's orientation.
    constexpr int kGrid = 16;
    double best_alpha = 0.0;
    double best_fid = fidelity_term(init, 0.0, p.target, p.target_self,
                                    cfg.kernel, false)
                          .value;
    for (int r = 1; r < kGrid; ++r) {
      const double alpha = 2.0 * 3.14159265358979323846 * r / kGrid;
      const double fid =
          fidelity_term(init, alpha, p.target, p.target_self, cfg.kernel, false)
              .value;
      if (fid < best_fid) {
        best_fid = fid;
        best_alpha = alpha;
      }
    }
    x[2 * p.n] = best_alpha;
  }

  int total_iterations = 0;
  const auto solve = [&](double lambda, std::vector<double> start) {
    Problem stage = p;
    stage.cfg.lambda = lambda;
    std::vector<double> probe_grad;
    const double f0 = stage.eval(start, probe_grad);
    LbfgsOptions opts;
    opts.max_iter = cfg.max_iter;
    opts.history_size = cfg.history_size;
    opts.grad_tol = cfg.grad_tol * (1.0 + std::abs(f0));
    return lbfgs_minimize(
        [&stage](const std::vector<double>& xx, std::vector<double>& gg) {
          return stage.eval(xx, gg);
        },
        std::move(start), opts);
  };

  if (cfg.continuation) {
    LbfgsResult warm = solve(cfg.lambda / 10.0, x);
    total_iterations += warm.iterations;
    x = std::move(warm.x);
  }
  LbfgsResult run = solve(cfg.lambda, std::move(x));
  total_iterations += run.iterations;

  MatchResult result;
  result.end_curve = p.unpack(run.x);
  double alpha = p.alpha_of(run.x);
  alpha = std::fmod(alpha, 2.0 * 3.14159265358979323846);
  if (alpha < 0.0) alpha += 2.0 * 3.14159265358979323846;
  result.rotation = alpha;
  result.elastic_distance = std::sqrt(elastic_term(result.end_curve, p.q0, nullptr));
  result.fidelity = fidelity_term(result.end_curve, alpha, p.target,
                                  p.target_self, cfg.kernel, false)
                        .value;
  result.objective_value = result.elastic_distance * result.elastic_distance +
                           cfg.lambda * result.fidelity;
  result.iterations = total_iterations;
  result.termination = run.termination;
  result.converged = run.termination == Termination::GradientTol;
  return result;
}

}  // namespace elastic
