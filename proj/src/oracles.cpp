#include "bipot/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bipot {

GridSpec GridSpec::cube(Eigen::Index dim, double lo, double hi, int points, std::size_t budget) {
    GridSpec g;
    g.box.assign(static_cast<std::size_t>(dim), {lo, hi});
    g.points_per_axis = points;
    g.budget = budget;
    return g;
}

void GridSpec::validate() const {
    if (box.empty()) throw std::invalid_argument("GridSpec: empty box");
    if (points_per_axis < 2) throw std::invalid_argument("GridSpec: need at least 2 points per axis");
    for (const auto& [lo, hi] : box) {
        if (!(lo < hi)) throw std::invalid_argument("GridSpec: axis with min >= max");
    }
}

std::size_t GridSpec::point_count() const {
    validate();
    std::size_t total = 1;
    const auto per = static_cast<std::size_t>(points_per_axis);
    for (std::size_t i = 0; i < box.size(); ++i) {
        if (total > budget / per) throw std::length_error("GridSpec: point budget exceeded");
        total *= per;
    }
    if (total > budget) throw std::length_error("GridSpec: point budget exceeded");
    return total;
}

double GridSpec::coordinate(Eigen::Index axis, int i) const {
    const auto& [lo, hi] = box[static_cast<std::size_t>(axis)];
    if (i == points_per_axis - 1) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / (points_per_axis - 1);
}

Vec GridSpec::point(std::size_t k) const {
    Vec p(dim());
    for (Eigen::Index a = 0; a < dim(); ++a) {
        p[a] = coordinate(a, static_cast<int>(k % static_cast<std::size_t>(points_per_axis)));
        k /= static_cast<std::size_t>(points_per_axis);
    }
    return p;
}

GridSpec GridSpec::dilated(double factor) const {
    GridSpec g = *this;
    for (auto& [lo, hi] : g.box) {
        lo *= factor;
        hi *= factor;
    }
    return g;
}

double grid_conjugate(const ConvexFn& phi, const GridSpec& grid, const Vec& y) {
    if (grid.dim() != y.size() || phi.dim != y.size()) throw std::invalid_argument("grid_conjugate: dimension mismatch");
    const std::size_t count = grid.point_count();
    double best = -std::numeric_limits<double>::infinity();
    Vec x(grid.dim());
    for (std::size_t k = 0; k < count; ++k) {
        std::size_t r = k;
        for (Eigen::Index a = 0; a < grid.dim(); ++a) {
            x[a] = grid.coordinate(a, static_cast<int>(r % static_cast<std::size_t>(grid.points_per_axis)));
            r /= static_cast<std::size_t>(grid.points_per_axis);
        }
        const ExtReal fx = phi(x);
        if (fx.is_infinite()) continue;
        best = std::max(best, x.dot(y) - fx.value());
    }
    return best;
}

std::vector<PointPair> lattice_critical_scan(const Bipotential& b, const GridSpec& grid, double tol,
                                             const PairEmbedding& embed) {
    const std::size_t count = grid.point_count();
    if (!embed && grid.dim() != b.dim_x + b.dim_y) {
        throw std::invalid_argument("lattice_critical_scan: grid dimension must equal dim_x + dim_y");
    }
    std::vector<PointPair> out;
    for (std::size_t k = 0; k < count; ++k) {
        const Vec p = grid.point(k);
        PointPair pair = embed ? embed(p) : PointPair{p.head(b.dim_x), p.tail(b.dim_y)};
        if (is_critical(b, pair.x, pair.y, tol)) out.push_back(std::move(pair));
    }
    return out;
}

ConjugateVerdict conjugate_pair_check(const ConvexFn& phi, const ConvexFn& phi_star, const GridSpec& grid,
                                      std::span<const Vec> probes, double tol, const ConjugateCheckOptions& opts) {
    ConjugateVerdict v;
    for (const Vec& y : probes) {
        ProbeOutcome o;
        o.y = y;
        const ExtReal claimed = phi_star(y);
        if (claimed.is_finite()) {
            o.claimed = claimed.value();
            o.grid_value = grid_conjugate(phi, grid, y);
            const double err = o.claimed - o.grid_value;
            o.passed = err <= tol && err >= -opts.upper_slack;
            v.worst_error = std::max(v.worst_error, std::abs(err));
        } else {
            o.expected_infinite = true;
            o.passed = false;
            double factor = 1.0;
            for (int k = 0; k <= opts.max_dilations; ++k, factor *= 10.0) {
                o.grid_value = grid_conjugate(phi, grid.dilated(factor), y);
                if (o.grid_value > opts.large) {
                    o.passed = true;
                    break;
                }
            }
        }
        v.passed = v.passed && o.passed;
        v.outcomes.push_back(std::move(o));
    }
    return v;
}

}  // namespace bipot
