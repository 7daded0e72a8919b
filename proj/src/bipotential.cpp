#include "bipot/bipotential.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bipot {

ExtReal Bipotential::operator()(const Vec& x, const Vec& y) const {
    if (x.size() != dim_x || y.size() != dim_y) {
        throw std::invalid_argument("bipotential " + name + ": dimension mismatch");
    }
    return eval(x, y);
}

ConvexFn Bipotential::partial_x(const Vec& y) const {
    return ConvexFn::from_eval([b = *this, y](const Vec& z) { return b(z, y); }, dim_x, name + "(., y)");
}

ConvexFn Bipotential::partial_y(const Vec& x) const {
    return ConvexFn::from_eval([b = *this, x](const Vec& w) { return b(x, w); }, dim_y, name + "(x, .)");
}

ExtReal gap(const Bipotential& b, const Vec& x, const Vec& y) {
    require_same_dim(x, y, "gap");
    return b(x, y) - x.dot(y);
}

bool is_critical(const Bipotential& b, const Vec& x, const Vec& y, double tol) {
    const ExtReal g = gap(b, x, y);
    if (g.is_infinite()) return false;
    return g.value() <= tol * std::max(1.0, std::abs(x.dot(y)));
}

Bipotential separable(ConvexFn phi, ConvexFn phi_star) {
    Bipotential b;
    b.dim_x = phi.dim;
    b.dim_y = phi_star.dim;
    b.name = "separable(" + phi.name + ", " + phi_star.name + ")";
    b.eval = [phi = std::move(phi), phi_star = std::move(phi_star)](const Vec& x, const Vec& y) {
        return phi(x) + phi_star(y);
    };
    return b;
}

Bipotential b_infinity(LawGraph graph, Eigen::Index dim_x, Eigen::Index dim_y) {
    Bipotential b;
    b.dim_x = dim_x;
    b.dim_y = dim_y;
    b.name = "b_infinity(" + graph.description + ")";
    b.eval = [graph = std::move(graph)](const Vec& x, const Vec& y) {
        return graph.contains(x, y) ? ExtReal(x.dot(y)) : ExtReal::infinity();
    };
    return b;
}

AxiomReport verify_axioms(const Bipotential& b, std::span<const PointPair> samples, const ProbeSource& probes,
                          double tol) {
    if (samples.empty()) throw std::invalid_argument("verify_axioms: empty sample set");
    AxiomReport report;
    report.samples_used = samples.size();

    for (std::size_t i = 0; i < samples.size(); ++i) {
        const auto& [x, y] = samples[i];
        const ExtReal g = gap(b, x, y);

        if (g.is_finite() && g.value() < -tol) {
            report.inequality_violations.push_back({x, y, g.value()});
            report.worst_gap_violation = std::min(report.worst_gap_violation, g.value());
        }

        if (i + 1 < samples.size()) {
            const auto& next = samples[i + 1];
            const Verdict vx = check_segment_convexity(b.partial_x(y), x, next.x, 3, tol);
            const Verdict vy = check_segment_convexity(b.partial_y(x), y, next.y, 3, tol);
            report.segment_checks += 2;
            if (!vx) report.convexity_failures.push_back({x, y, 0, *vx.witness_t, vx.worst_residual});
            if (!vy) report.convexity_failures.push_back({x, y, 1, *vy.witness_t, vy.worst_residual});
        }

        if (g.is_finite() && is_critical(b, x, y, tol)) {
            ++report.critical_pairs;
            // An inexactly critical pair may miss the inequality by its own gap.
            const double slack = tol * std::max(1.0, std::abs(x.dot(y))) + std::max(g.value(), 0.0);
            const auto px = probes(x);
            const auto py = probes(y);
            const Verdict sx = check_subgradient(b.partial_x(y), x, y, px, slack);
            const Verdict sy = check_subgradient(b.partial_y(x), y, x, py, slack);
            if (!sx) report.equivalence_failures.push_back({x, y, 0, *sx.witness});
            if (!sy) report.equivalence_failures.push_back({x, y, 1, *sy.witness});
        }
    }
    return report;
}

}  // namespace bipot
