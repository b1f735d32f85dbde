#pragma once

#include <utility>
#include <vector>

#include "elastic/curve.hpp"
#include "elastic/match_result.hpp"

namespace elastic {

/// Discrete monotone reparametrization of [0,1]: a strictly increasing
/// lattice path from (0,0) to (N-1,N-1), read as a piecewise-linear map.
struct Reparametrization {
  std::vector<std::pair<int, int>> pairs;

  /// Evaluates the map at t in [0,1] (grid coordinates scaled to [0,1]).
  double operator()(double t) const;
};

struct ExactMatchConfig {
  double a = 1.0;
  double b = 0.5;
  int max_slope_step = 4;       // K: lattice moves are {1..K} x {1..K}
  bool rotation_search = false;
  int rotation_grid = 64;       // R candidate angles 2 pi r / R
  bool seam_search = false;     // closed curves: search cyclic seam shifts
  int threads = 1;              // for rotation / seam candidates; 0 = hardware
};

/// Minimizes ||F(c0) - F(c1 o phi)||_{L2} over monotone lattice paths with
/// per-axis steps in {1..K}, using the isometric cell action
/// q -> (q o phi) sqrt(phi'). Returns the optimal path and the distance.
/// Closed inputs are cut open at vertex 0. Ties prefer moves closer to the
/// diagonal. Throws CurveTooSmall if N < K+2.
std::pair<Reparametrization, double> dp_match(const DiscreteCurve& c0,
                                              const DiscreteCurve& c1,
                                              const ExactMatchConfig& cfg);

/// dp_match extended with exhaustive searches: over a rotation grid applied
/// to c1 (refined by golden section around the best angle) and, for closed
/// curves with seam_search, over all cyclic shifts of c1's start vertex.
/// The end curve is the rotated, shifted, reparametrized target re-evaluated
/// on the uniform grid.
MatchResult exact_distance(const DiscreteCurve& c0, const DiscreteCurve& c1,
                           const ExactMatchConfig& cfg);

}  // namespace elastic
