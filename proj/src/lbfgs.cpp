#include "elastic/lbfgs.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace elastic {

namespace {

constexpr double kArmijo = 1e-4;
constexpr double kCurvature = 0.9;
constexpr double kInf = std::numeric_limits<double>::infinity();

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double inf_norm(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

struct Probe {
  double alpha = 0.0;
  double value = kInf;
  double slope = 0.0;  // directional derivative along the search direction
};

// Minimizer of the cubic through (a.alpha, a.value, a.slope) and
// (b.alpha, b.value, b.slope); falls back to bisection when degenerate.
double cubic_step(const Probe& a, const Probe& b) {
  const double d1 = a.slope + b.slope - 3.0 * (a.value - b.value) / (a.alpha - b.alpha);
  const double disc = d1 * d1 - a.slope * b.slope;
  if (disc < 0.0 || !std::isfinite(disc)) return 0.5 * (a.alpha + b.alpha);
  const double d2 = std::sqrt(disc) * (b.alpha > a.alpha ? 1.0 : -1.0);
  const double denom = b.slope - a.slope + 2.0 * d2;
  if (denom == 0.0 || !std::isfinite(denom)) return 0.5 * (a.alpha + b.alpha);
  double t = b.alpha - (b.alpha - a.alpha) * (b.slope + d2 - d1) / denom;
  const double lo = std::min(a.alpha, b.alpha), hi = std::max(a.alpha, b.alpha);
  const double pad = 0.1 * (hi - lo);
  if (!std::isfinite(t) || t < lo + pad || t > hi - pad) t = 0.5 * (a.alpha + b.alpha);
  return t;
}

// Strong Wolfe line search. Keeps the gradient of the accepted point so the
// caller does not have to re-evaluate.
class LineSearch {
 public:
  LineSearch(const ValueGradientFn& fn, const std::vector<double>& x,
             const std::vector<double>& dir, double f0, double slope0)
      : fn_(fn), x_(x), dir_(dir), f0_(f0), slope0_(slope0), trial_(x.size()),
        grad_(x.size()) {}

  bool run(Probe& out) {
    Probe prev;
    prev.alpha = 0.0;
    prev.value = f0_;
    prev.slope = slope0_;
    double alpha = 1.0;
    for (int iter = 0; iter < 20; ++iter) {
      Probe cur = at(alpha);
      if (!std::isfinite(cur.value) || !armijo(cur) ||
          (iter > 0 && cur.value >= prev.value)) {
        return zoom(prev, cur, out);
      }
      if (curvature(cur)) {
        accepted_grad_ = grad_;
        out = cur;
        return true;
      }
      if (cur.slope >= 0.0) return zoom(cur, prev, out);
      prev = cur;
      alpha = std::min(2.0 * alpha, 1e8);
    }
    return false;
  }

  const std::vector<double>& accepted_grad() const { return accepted_grad_; }

 private:
  Probe at(double alpha) {
    for (std::size_t i = 0; i < x_.size(); ++i) trial_[i] = x_[i] + alpha * dir_[i];
    Probe p;
    p.alpha = alpha;
    p.value = fn_(trial_, grad_);
    p.slope = std::isfinite(p.value) ? dot(grad_, dir_) : 0.0;
    return p;
  }

  bool armijo(const Probe& p) const {
    return p.value <= f0_ + kArmijo * p.alpha * slope0_;
  }
  bool curvature(const Probe& p) const {
    return std::abs(p.slope) <= -kCurvature * slope0_;
  }

  bool zoom(Probe lo, Probe hi, Probe& out) {
    std::vector<double> lo_grad;
    for (int iter = 0; iter < 40; ++iter) {
      if (std::abs(hi.alpha - lo.alpha) < 1e-16 * std::max(1.0, std::abs(lo.alpha)))
        break;
      const double alpha =
          std::isfinite(hi.value) ? cubic_step(lo, hi) : 0.5 * (lo.alpha + hi.alpha);
      Probe cur = at(alpha);
      if (!std::isfinite(cur.value) || !armijo(cur) || cur.value >= lo.value) {
        hi = cur;
        continue;
      }
      if (curvature(cur)) {
        accepted_grad_ = grad_;
        out = cur;
        return true;
      }
      if (cur.slope * (hi.alpha - lo.alpha) >= 0.0) hi = lo;
      lo = cur;
      lo_grad = grad_;
    }
    // No strong Wolfe point; accept a plain decrease if one was bracketed.
    if (lo.alpha > 0.0 && lo.value < f0_ && std::isfinite(lo.value) &&
        !lo_grad.empty()) {
      accepted_grad_ = lo_grad;
      out = lo;
      return true;
    }
    return false;
  }

  const ValueGradientFn& fn_;
  const std::vector<double>& x_;
  const std::vector<double>& dir_;
  double f0_;
  double slope0_;
  std::vector<double> trial_;
  std::vector<double> grad_;
  std::vector<double> accepted_grad_;
};

}  // namespace

const char* to_string(Termination t) {
  switch (t) {
    case Termination::GradientTol:
      return "gradient_tol";
    case Termination::MaxIter:
      return "max_iter";
    case Termination::LineSearchFailure:
      return "line_search_failure";
  }
  return "unknown";
}

LbfgsResult lbfgs_minimize(const ValueGradientFn& fn, std::vector<double> x0,
                           const LbfgsOptions& opts) {
  const std::size_t n = x0.size();
  std::vector<double> x = std::move(x0);
  std::vector<double> grad(n);
  double value = fn(x, grad);

  LbfgsResult best;
  best.x = x;
  best.value = value;
  best.grad_inf_norm = inf_norm(grad);

  struct Pair {
    std::vector<double> s, y;
    double rho;
  };
  std::deque<Pair> history;

  std::vector<double> dir(n), alpha_buf;
  int iter = 0;
  for (; iter < opts.max_iter; ++iter) {
    const double gnorm = inf_norm(grad);
    if (value <= best.value) {
      best.x = x;
      best.value = value;
      best.grad_inf_norm = gnorm;
    }
    if (gnorm < opts.grad_tol) {
      best.iterations = iter;
      best.termination = Termination::GradientTol;
      return best;
    }

    // Two-loop recursion for d = -H g.
    dir = grad;
    alpha_buf.assign(history.size(), 0.0);
    for (int k = static_cast<int>(history.size()) - 1; k >= 0; --k) {
      const Pair& p = history[k];
      alpha_buf[k] = p.rho * dot(p.s, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] -= alpha_buf[k] * p.y[i];
    }
    if (!history.empty()) {
      const Pair& last = history.back();
      const double gamma = dot(last.s, last.y) / dot(last.y, last.y);
      for (double& v : dir) v *= gamma;
    }
    for (std::size_t k = 0; k < history.size(); ++k) {
      const Pair& p = history[k];
      const double beta = p.rho * dot(p.y, dir);
      for (std::size_t i = 0; i < n; ++i) dir[i] += (alpha_buf[k] - beta) * p.s[i];
    }
    for (double& v : dir) v = -v;

    double slope = dot(grad, dir);
    if (slope >= 0.0) {  // not a descent direction; restart from steepest descent
      history.clear();
      for (std::size_t i = 0; i < n; ++i) dir[i] = -grad[i];
      slope = dot(grad, dir);
      if (slope >= 0.0) break;  // gradient numerically zero
    }

    LineSearch search(fn, x, dir, value, slope);
    Probe accepted;
    if (!search.run(accepted)) {
      best.iterations = iter;
      best.termination = Termination::LineSearchFailure;
      return best;
    }

    Pair pair;
    pair.s.resize(n);
    pair.y.resize(n);
    const std::vector<double>& g_new = search.accepted_grad();
    for (std::size_t i = 0; i < n; ++i) {
      pair.s[i] = accepted.alpha * dir[i];
      x[i] += pair.s[i];
      pair.y[i] = g_new[i] - grad[i];
    }
    value = accepted.value;
    grad = g_new;

    const double sy = dot(pair.s, pair.y);
    if (sy > 1e-12 * std::sqrt(dot(pair.s, pair.s)) * std::sqrt(dot(pair.y, pair.y))) {
      pair.rho = 1.0 / sy;
      history.push_back(std::move(pair));
      if (static_cast<int>(history.size()) > opts.history_size) history.pop_front();
    }
  }

  const double gnorm = inf_norm(grad);
  if (value <= best.value) {
    best.x = x;
    best.value = value;
    best.grad_inf_norm = gnorm;
  }
  best.iterations = iter;
  best.termination = best.grad_inf_norm < opts.grad_tol ? Termination::GradientTol
                                                        : Termination::MaxIter;
  return best;
}

}  // namespace elastic
