#include "elastic/exact.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "elastic/fab.hpp"
#include "elastic/parallel.hpp"

namespace elastic {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Move {
  int di, dj;
};

std::vector<Move> move_set(int k) {
  std::vector<Move> moves;
  moves.reserve(k * k);
  for (int di = 1; di <= k; ++di)
    for (int dj = 1; dj <= k; ++dj) moves.push_back({di, dj});
  // Ties in the DP prefer moves closer to the diagonal (gentler warps).
  std::sort(moves.begin(), moves.end(), [](const Move& a, const Move& b) {
    const int sa = std::abs(a.di - a.dj), sb = std::abs(b.di - b.dj);
    if (sa != sb) return sa < sb;
    if (a.di != b.di) return a.di < b.di;
    return a.dj < b.dj;
  });
  return moves;
}

// L2 contribution of a single lattice move from (i,j), using the cell action
// q -> (q o phi) sqrt(phi'). The integrand is piecewise constant on di*dj
// equal parameter slices, so the sum is exact for piecewise-linear curves.
double move_cost(const std::vector<Complex>& q0, const std::vector<Complex>& q1,
                 double delta, int i, int j, int di, int dj) {
  const double root = std::sqrt(static_cast<double>(dj) / di);
  double total = 0.0;
  for (int k = 0; k < di * dj; ++k) {
    const int p = k / dj;
    const int m = k / di;
    total += std::norm(q0[i + p] - root * q1[j + m]);
  }
  return total * delta / dj;
}

struct DpOutcome {
  double cost_sq;
  std::vector<std::pair<int, int>> path;
};

DpOutcome dp_core(const std::vector<Complex>& q0, const std::vector<Complex>& q1,
                  double delta, int k, bool want_path) {
  const int n = static_cast<int>(q0.size()) + 1;  // grid points
  const std::vector<Move> moves = move_set(k);
  std::vector<double> cost(static_cast<std::size_t>(n) * n, kInf);
  std::vector<std::uint8_t> via(want_path ? cost.size() : 0, 0);
  cost[0] = 0.0;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == 0 && j == 0) continue;
      double best = kInf;
      std::uint8_t best_move = 0;
      for (std::size_t mi = 0; mi < moves.size(); ++mi) {
        const int pi = i - moves[mi].di;
        const int pj = j - moves[mi].dj;
        if (pi < 0 || pj < 0) continue;
        const double prev = cost[static_cast<std::size_t>(pi) * n + pj];
        if (prev == kInf) continue;
        const double c =
            prev + move_cost(q0, q1, delta, pi, pj, moves[mi].di, moves[mi].dj);
        if (c < best) {
          best = c;
          best_move = static_cast<std::uint8_t>(mi);
        }
      }
      cost[static_cast<std::size_t>(i) * n + j] = best;
      if (want_path) via[static_cast<std::size_t>(i) * n + j] = best_move;
    }
  }

  DpOutcome out;
  out.cost_sq = cost[static_cast<std::size_t>(n) * n - 1];
  if (want_path) {
    int i = n - 1, j = n - 1;
    while (i > 0 || j > 0) {
      out.path.emplace_back(i, j);
      const Move& mv = moves[via[static_cast<std::size_t>(i) * n + j]];
      i -= mv.di;
      j -= mv.dj;
    }
    out.path.emplace_back(0, 0);
    std::reverse(out.path.begin(), out.path.end());
  }
  return out;
}

DiscreteCurve as_open(const DiscreteCurve& curve) {
  return curve.closed ? cut_open(curve, 0) : curve;
}

}  // namespace

double Reparametrization::operator()(double t) const {
  const int last = static_cast<int>(pairs.size()) - 1;
  const double n1 = static_cast<double>(pairs[last].first);
  const double x = t * n1;
  if (x <= 0.0) return 0.0;
  if (x >= n1) return 1.0;
  // pairs are strictly increasing in both coordinates
  int lo = 0, hi = last;
  while (hi - lo > 1) {
    const int mid = (lo + hi) / 2;
    if (pairs[mid].first <= x)
      lo = mid;
    else
      hi = mid;
  }
  const double x0 = pairs[lo].first, x1 = pairs[hi].first;
  const double y0 = pairs[lo].second, y1 = pairs[hi].second;
  const double u = (x - x0) / (x1 - x0);
  return (y0 + u * (y1 - y0)) / n1;
}

std::pair<Reparametrization, double> dp_match(const DiscreteCurve& c0,
                                              const DiscreteCurve& c1,
                                              const ExactMatchConfig& cfg) {
  if (c0.closed != c1.closed)
    throw ParamMismatch("curves must share the closed flag");
  if (c0.vertex_count() != c1.vertex_count())
    throw ParamMismatch("curves must share the vertex count; resample first");
  if (cfg.max_slope_step < 1) throw ParamMismatch("max_slope_step must be >= 1");

  const DiscreteCurve a = as_open(c0);
  const DiscreteCurve b = as_open(c1);
  const int n = a.vertex_count();
  if (n < cfg.max_slope_step + 2)
    throw CurveTooSmall("need at least K+2 vertices for lattice moves up to K");

  const FabImage qa = fab_forward(a, cfg.a, cfg.b);
  const FabImage qb = fab_forward(b, cfg.a, cfg.b);
  const DpOutcome out =
      dp_core(qa.samples, qb.samples, 1.0 / qa.cell_count(), cfg.max_slope_step,
              /*want_path=*/true);

  Reparametrization phi;
  phi.pairs = out.path;
  return {std::move(phi), std::sqrt(std::max(out.cost_sq, 0.0))};
}

MatchResult exact_distance(const DiscreteCurve& c0, const DiscreteCurve& c1,
                           const ExactMatchConfig& cfg) {
  const bool closed = c0.closed;
  const int n_shifts = (closed && cfg.seam_search) ? c1.vertex_count() : 1;
  const int n_rots = cfg.rotation_search ? std::max(1, cfg.rotation_grid) : 1;

  ExactMatchConfig base = cfg;
  base.rotation_search = false;
  base.seam_search = false;
  base.threads = 1;

  const auto candidate = [&](int shift, double alpha) {
    DiscreteCurve cand = (closed && shift != 0) ? cyclic_shift(c1, shift) : c1;
    if (alpha != 0.0) cand = rotated(cand, alpha);
    return cand;
  };
  const auto eval = [&](int shift, double alpha) {
    return dp_match(c0, candidate(shift, alpha), base).second;
  };

  const int total = n_shifts * n_rots;
  std::vector<double> dist(total);
  parallel_for(total, cfg.threads, [&](int idx) {
    dist[idx] = eval(idx / n_rots, 2.0 * kPi * (idx % n_rots) / n_rots);
  });

  int best_idx = 0;
  for (int i = 1; i < total; ++i)
    if (dist[i] < dist[best_idx]) best_idx = i;
  const int best_shift = best_idx / n_rots;
  double best_alpha = 2.0 * kPi * (best_idx % n_rots) / n_rots;
  double best_dist = dist[best_idx];
  int dp_runs = total;

  if (cfg.rotation_search && n_rots > 1) {
    // Golden-section refinement around the best grid angle.
    const double gr = 0.6180339887498949;
    double lo = best_alpha - 2.0 * kPi / n_rots;
    double hi = best_alpha + 2.0 * kPi / n_rots;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = eval(best_shift, c);
    double fd = eval(best_shift, d);
    dp_runs += 2;
    while (hi - lo > 1e-6) {
      if (fc < fd) {
        hi = d;
        d = c;
        fd = fc;
        c = hi - gr * (hi - lo);
        fc = eval(best_shift, c);
      } else {
        lo = c;
        c = d;
        fc = fd;
        d = lo + gr * (hi - lo);
        fd = eval(best_shift, d);
      }
      ++dp_runs;
    }
    const double alpha_ref = fc < fd ? c : d;
    const double dist_ref = std::min(fc, fd);
    if (dist_ref < best_dist) {
      best_dist = dist_ref;
      best_alpha = alpha_ref;
    }
  }

  const DiscreteCurve winner = candidate(best_shift, best_alpha);
  const auto [phi, final_dist] = dp_match(c0, winner, base);

  const DiscreteCurve target_open = as_open(winner);
  const int n_grid = target_open.vertex_count();
  DiscreteCurve end;
  end.closed = false;
  end.vertices.resize(n_grid);
  for (int i = 0; i < n_grid; ++i)
    end.vertices[i] =
        evaluate_uniform(target_open, phi(static_cast<double>(i) / (n_grid - 1)));
  if (closed) {
    end.vertices.pop_back();
    end.closed = true;
  }

  MatchResult result;
  result.end_curve = std::move(end);
  result.elastic_distance = final_dist;
  result.fidelity = 0.0;
  best_alpha = std::fmod(best_alpha, 2.0 * kPi);
  if (best_alpha < 0.0) best_alpha += 2.0 * kPi;
  result.rotation = best_alpha;
  result.objective_value = final_dist * final_dist;
  result.iterations = dp_runs;
  result.converged = true;
  result.termination = Termination::GradientTol;
  return result;
}

}  // namespace elastic
