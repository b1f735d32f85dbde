#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "elastic/curve.hpp"

namespace elastic::cli {

/// Parameters for the parametric shape generators. `jitter` perturbs each
/// shape parameter multiplicatively by (1 + jitter * U(-1,1)), seeded;
/// `noise` adds Gaussian vertex noise on top; `rotate` applies a fixed
/// rotation (radians).
struct SynthParams {
  int n = 100;
  double jitter = 0.0;
  double noise = 0.0;
  double rotate = 0.0;
  std::uint64_t seed = 0;

  double eccentricity = 0.6;  // ellipse
  double width = 1.2;         // rounded-rectangle
  double height = 2.0;
  double corner = 0.25;
  double neck = 0.3;        // dumbbell
  int star_points = 5;      // star
  double star_amplitude = 0.25;
  std::string base = "circle";  // appendage
  double eps = 0.05;
};

/// Generators: circle, ellipse, rounded-rectangle, dumbbell, star,
/// appendage. All curves are closed; appendage adds a thin double-back of
/// length eps to the base shape (total length grows by exactly 2 eps) and is
/// the one generator whose output has n+2 vertices.
DiscreteCurve synth_shape(const std::string& generator, const SynthParams& params);

const std::vector<std::string>& synth_generators();

}  // namespace elastic::cli
