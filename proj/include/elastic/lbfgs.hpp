#pragma once

#include <functional>
#include <vector>

namespace elastic {

enum class Termination {
  GradientTol,
  MaxIter,
  LineSearchFailure,
};

const char* to_string(Termination t);

struct LbfgsOptions {
  int max_iter = 500;
  double grad_tol = 1e-6;  // on the max norm of the gradient
  int history_size = 10;
};

struct LbfgsResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  Termination termination = Termination::MaxIter;
  double grad_inf_norm = 0.0;
};

/// Evaluates the objective at x and fills `grad`. May return a non-finite
/// value to mark x as infeasible; the line search then backtracks.
using ValueGradientFn =
    std::function<double(const std::vector<double>& x, std::vector<double>& grad)>;

/// Limited-memory quasi-Newton minimization (two-loop recursion) with a
/// strong Wolfe line search (c1 = 1e-4, c2 = 0.9). Terminates when the
/// gradient max norm drops below grad_tol, on max_iter, or on line search
/// failure; the best iterate seen is always returned.
LbfgsResult lbfgs_minimize(const ValueGradientFn& fn, std::vector<double> x0,
                           const LbfgsOptions& opts);

}  // namespace elastic
