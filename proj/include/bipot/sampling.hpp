#pragma once

#include <random>
#include <vector>

#include "bipot/bipotential.hpp"

namespace bipot {

using Rng = std::mt19937_64;

double uniform(Rng& rng, double lo, double hi);
/// Uniform in [−half_width, half_width]^n.
Vec uniform_box(Rng& rng, Eigen::Index n, double half_width);
/// Uniform in the closed ball B(radius) ⊂ R^n (rejection from the cube).
Vec uniform_ball(Rng& rng, Eigen::Index n, double radius);
/// Uniform on the sphere of radius r.
Vec uniform_sphere(Rng& rng, Eigen::Index n, double radius);

/// Deterministic set of 100 probes around `at`: 0, at/2, 2·at, −at and rings
/// of fixed directions at radii from 1e-3 to the unit scale. Supports n = 2, 3.
std::vector<Vec> ring_probes(const Vec& at);

/// ProbeSource wrapping ring_probes.
ProbeSource standard_probes();

}  // namespace bipot
