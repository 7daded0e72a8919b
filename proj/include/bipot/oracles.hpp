#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "bipot/bipotential.hpp"

namespace bipot {

/// Tensor grid over an axis-aligned box with the same number of points per axis.
struct GridSpec {
    std::vector<std::pair<double, double>> box;  // per-axis (min, max)
    int points_per_axis = 2;
    std::size_t budget = 10'000'000;

    /// Box [lo, hi]^dim.
    static GridSpec cube(Eigen::Index dim, double lo, double hi, int points, std::size_t budget = 10'000'000);

    Eigen::Index dim() const { return static_cast<Eigen::Index>(box.size()); }
    /// points_per_axis^dim; throws std::length_error if it exceeds budget.
    std::size_t point_count() const;
    /// Throws std::invalid_argument on an empty box, min ≥ max or fewer than 2 points.
    void validate() const;
    /// Axis coordinate with exact endpoints.
    double coordinate(Eigen::Index axis, int i) const;
    /// Point with flat index k (axis 0 varies fastest).
    Vec point(std::size_t k) const;
    /// Box scaled about the origin.
    GridSpec dilated(double factor) const;
};

/// max over grid points of ⟨x,y⟩ − φ(x): a lower bound on φ*(y).
/// Throws std::length_error when the grid exceeds its budget.
double grid_conjugate(const ConvexFn& phi, const GridSpec& grid, const Vec& y);

/// Maps a lattice point to a pair; the default splits the coordinates.
using PairEmbedding = std::function<PointPair(const Vec&)>;

/// All lattice pairs with gap ≤ tol·max(1, |⟨x,y⟩|), in lattice order.
std::vector<PointPair> lattice_critical_scan(const Bipotential& b, const GridSpec& grid, double tol = kDefaultTol,
                                             const PairEmbedding& embed = {});

struct ConjugateCheckOptions {
    double large = 1e6;       // grid sup above this counts as divergence
    int max_dilations = 12;   // box ×10 per step while looking for divergence
    double upper_slack = 1e-9;  // grid sup may exceed φ* only by rounding
};

struct ProbeOutcome {
    Vec y;
    bool expected_infinite = false;
    double grid_value = 0.0;
    double claimed = 0.0;  // finite claimed conjugate, when any
    bool passed = true;
};

struct ConjugateVerdict {
    bool passed = true;
    std::vector<ProbeOutcome> outcomes;
    double worst_error = 0.0;  // over finite probes

    explicit operator bool() const { return passed; }
};

/// Checks phi_star against grid conjugates of phi at each probe. Finite
/// probes pass when −upper_slack ≤ φ*(y) − grid ≤ tol (the grid value is a
/// lower bound). Probes where φ*(y) = +∞ pass when the grid conjugate on the
/// box dilated by 10^k exceeds `large` for some k ≤ max_dilations.
ConjugateVerdict conjugate_pair_check(const ConvexFn& phi, const ConvexFn& phi_star, const GridSpec& grid,
                                      std::span<const Vec> probes, double tol = 1e-3,
                                      const ConjugateCheckOptions& opts = {});

}  // namespace bipot
