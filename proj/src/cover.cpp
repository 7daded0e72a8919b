#include "bipot/cover.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipot {

bool lambda_space_contains(const LambdaSpace& space, const Vec& lambda) {
    return std::visit(
        [&](const auto& s) -> bool {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, IntervalSpace>) {
                if (lambda.size() != 1) return false;
                const double slack = kParamSlack * std::max({1.0, std::abs(s.lo), std::abs(s.hi)});
                return lambda[0] >= s.lo - slack && lambda[0] <= s.hi + slack;
            } else {
                if (lambda.size() != s.dim) return false;
                return lambda.norm() <= s.radius * (1.0 + kParamSlack);
            }
        },
        space);
}

std::vector<Vec> interval_grid(double lo, double hi, int n) {
    if (!(lo <= hi)) throw std::invalid_argument("interval_grid: lo > hi");
    if (lo == hi) return {Vec::Constant(1, lo)};
    if (n < 2) throw std::invalid_argument("interval_grid: need at least 2 points");
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double v = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
        if (i == n - 1) v = hi;
        out.push_back(Vec::Constant(1, v));
    }
    return out;
}

std::vector<Vec> polar_grid(double radius, int angles, int radii) {
    if (radius < 0.0) throw std::invalid_argument("polar_grid: negative radius");
    std::vector<Vec> out;
    out.push_back(Vec::Zero(2));
    if (radius == 0.0) return out;
    if (angles < 1 || radii < 1) throw std::invalid_argument("polar_grid: need at least one angle and radius");
    out.reserve(1 + static_cast<std::size_t>(angles) * radii);
    for (int j = 1; j <= radii; ++j) {
        const double r = (j == radii) ? radius : radius * static_cast<double>(j) / radii;
        for (int i = 0; i < angles; ++i) {
            const double th = 2.0 * std::numbers::pi * static_cast<double>(i) / angles;
            Vec p(2);
            p << r * std::cos(th), r * std::sin(th);
            out.push_back(std::move(p));
        }
    }
    return out;
}

Bipotential ConvexCover::member_b(const Vec& lambda) const {
    if (!lambda_space_contains(lambda_space, lambda)) throw std::domain_error("member_b: parameter outside Lambda");
    Bipotential b;
    b.dim_x = dim_x;
    b.dim_y = dim_y;
    b.name = name + "[lambda]";
    b.eval = [f = family, lambda](const Vec& x, const Vec& y) { return f(lambda, x, y); };
    return b;
}

EnvelopeValue envelope_at(const ConvexCover& cover, const Vec& x, const Vec& y) {
    EnvelopeValue best{ExtReal::infinity(), -1, Vec()};
    std::ptrdiff_t idx = 0;
    auto consider = [&](const Vec& lambda) {
        const ExtReal v = cover.family(lambda, x, y);
        if (v < best.value) {
            best.value = v;
            best.argmin = idx;
            best.lambda = lambda;
        }
        ++idx;
    };
    for (const Vec& l : cover.lambda_samples) consider(l);
    if (cover.candidates) {
        for (const Vec& l : cover.candidates(x, y)) consider(l);
    }
    return best;
}

Bipotential inf_envelope(ConvexCover cover) {
    if (cover.lambda_samples.empty()) throw std::invalid_argument("inf_envelope: empty lambda_samples");
    Bipotential b;
    b.dim_x = cover.dim_x;
    b.dim_y = cover.dim_y;
    b.name = "inf_envelope(" + cover.name + ")";
    b.eval = [cover = std::move(cover)](const Vec& x, const Vec& y) { return envelope_at(cover, x, y).value; };
    return b;
}

ExtReal convex_combination(double alpha, ExtReal a, ExtReal b) {
    if (a.is_infinite() || b.is_infinite()) return ExtReal::infinity();
    return ExtReal(alpha * a.value() + (1.0 - alpha) * b.value());
}

ImplicitConvexityVerdict check_implicit_convexity(const ConvexCover& cover, const ImplicitConvexityCase& c,
                                                  double tol) {
    if (!(c.alpha >= 0.0 && c.alpha <= 1.0)) throw std::invalid_argument("check_implicit_convexity: alpha not in [0,1]");
    const bool fx = c.side == FrozenSide::freeze_x;
    const auto& select = fx ? cover.witness_x : cover.witness_y;
    const Vec lambda = select(c.lambda1, c.z1, c.lambda2, c.z2, c.alpha, c.fixed);
    if (!lambda_space_contains(cover.lambda_space, lambda)) {
        throw std::domain_error("check_implicit_convexity: witness outside Lambda");
    }

    auto f = [&](const Vec& l, const Vec& z) { return fx ? cover.family(l, c.fixed, z) : cover.family(l, z, c.fixed); };

    ImplicitConvexityVerdict v;
    v.lambda = lambda;
    const ExtReal rhs = convex_combination(c.alpha, f(c.lambda1, c.z1), f(c.lambda2, c.z2));
    if (rhs.is_infinite()) {
        v.vacuous = true;
        return v;
    }
    const Vec z = c.alpha * c.z1 + (1.0 - c.alpha) * c.z2;
    const ExtReal lhs = f(lambda, z);
    if (lhs.is_infinite()) {
        v.passed = false;
        v.residual = HUGE_VAL;
        return v;
    }
    v.residual = lhs.value() - rhs.value();
    v.passed = v.residual <= tol * std::max(1.0, std::abs(rhs.value()));
    return v;
}

CoverVerdict cover_covers(const ConvexCover& cover, const LawGraph& graph, std::span<const PointPair> samples,
                          double tol) {
    CoverVerdict v;
    auto any_critical = [&](const Vec& x, const Vec& y) {
        const double scale = tol * std::max(1.0, std::abs(x.dot(y)));
        auto critical_at = [&](const Vec& l) {
            const ExtReal b = cover.family(l, x, y);
            return b.is_finite() && b.value() - x.dot(y) <= scale;
        };
        for (const Vec& l : cover.lambda_samples) {
            if (critical_at(l)) return true;
        }
        if (cover.candidates) {
            for (const Vec& l : cover.candidates(x, y)) {
                if (critical_at(l)) return true;
            }
        }
        return false;
    };

    for (const auto& p : samples) {
        const bool crit = any_critical(p.x, p.y);
        if (graph.contains(p.x, p.y, tol)) {
            ++v.members;
            if (crit) {
                ++v.members_covered;
            } else {
                v.uncovered_members.push_back(p);
            }
        } else {
            ++v.non_members;
            if (crit) {
                v.spurious_critical.push_back(p);
            } else {
                ++v.non_members_clear;
            }
        }
    }
    v.passed = v.uncovered_members.empty() && v.spurious_critical.empty();
    return v;
}

}  // namespace bipot
