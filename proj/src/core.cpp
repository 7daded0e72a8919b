#include "bipot/core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace bipot {

std::string ExtReal::to_string() const {
    if (infinite_) return "inf";
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), value_);
    return std::string(buf.data(), res.ptr);
}

void require_same_dim(const Vec& a, const Vec& b, const char* where) {
    if (a.size() != b.size()) {
        throw std::invalid_argument(std::string(where) + ": dimension mismatch (" + std::to_string(a.size()) +
                                    " vs " + std::to_string(b.size()) + ")");
    }
}

double duality(const Vec& x, const Vec& y) {
    require_same_dim(x, y, "duality");
    return x.dot(y);
}

ExtReal indicator(const std::function<bool(const Vec&)>& member, const Vec& p) {
    return member(p) ? ExtReal(0.0) : ExtReal::infinity();
}

double positive_part(double alpha) { return std::max(alpha, 0.0); }

bool positively_colinear(const Vec& x, const Vec& y, double tol) {
    require_same_dim(x, y, "positively_colinear");
    const double nn = x.norm() * y.norm();
    return x.dot(y) >= nn - tol * std::max(1.0, nn);
}

bool in_ball(const Vec& y, double radius) { return y.norm() <= radius; }

ExtReal ConvexFn::operator()(const Vec& x) const {
    if (x.size() != dim) throw std::invalid_argument("ConvexFn " + name + ": dimension mismatch");
    return eval(x);
}

ConvexFn ConvexFn::from_eval(std::function<ExtReal(const Vec&)> f, Eigen::Index dim, std::string name) {
    ConvexFn fn;
    fn.in_domain = [f](const Vec& x) { return f(x).is_finite(); };
    fn.eval = std::move(f);
    fn.dim = dim;
    fn.name = std::move(name);
    return fn;
}

ConvexFn scaled_norm(double lambda, Eigen::Index dim) {
    return {[lambda](const Vec& x) { return ExtReal(lambda * x.norm()); }, [](const Vec&) { return true; }, dim,
            "scaled_norm"};
}

ConvexFn shifted_quadratic(double lambda, const Vec& a) {
    return {[lambda, a](const Vec& x) { return ExtReal(0.5 * lambda * x.squaredNorm() + x.dot(a)); },
            [](const Vec&) { return true; }, a.size(), "shifted_quadratic"};
}

ConvexFn shifted_quadratic_conjugate(double lambda, const Vec& a) {
    return {[lambda, a](const Vec& y) { return ExtReal((y - a).squaredNorm() / (2.0 * lambda)); },
            [](const Vec&) { return true; }, a.size(), "shifted_quadratic_conjugate"};
}

ConvexFn ball_indicator(double radius, Eigen::Index dim) {
    return {[radius](const Vec& y) { return in_ball(y, radius) ? ExtReal(0.0) : ExtReal::infinity(); },
            [radius](const Vec& y) { return in_ball(y, radius); }, dim, "ball_indicator"};
}

Verdict check_subgradient(const ConvexFn& f, const Vec& x, const Vec& u, std::span<const Vec> probes, double tol) {
    require_same_dim(x, u, "check_subgradient");
    if (probes.empty()) throw std::invalid_argument("check_subgradient: empty probe set");
    const ExtReal fx = f(x);
    if (fx.is_infinite()) throw std::invalid_argument("check_subgradient: f(x) = +inf");

    Verdict v;
    v.probes.assign(probes.begin(), probes.end());
    v.worst_residual = -HUGE_VAL;
    for (const Vec& z : probes) {
        const ExtReal fz = f(z);
        if (fz.is_infinite()) continue;
        const double residual = (z - x).dot(u) - (fz.value() - fx.value());
        v.worst_residual = std::max(v.worst_residual, residual);
        if (residual > tol && v.passed) {
            v.passed = false;
            v.witness = z;
        }
    }
    if (!v.passed) v.detail = "subgradient inequality violated at a probe";
    return v;
}

Verdict check_segment_convexity(const ConvexFn& f, const Vec& z1, const Vec& z2, int k, double tol) {
    require_same_dim(z1, z2, "check_segment_convexity");
    if (k < 1) throw std::invalid_argument("check_segment_convexity: k must be >= 1");
    Verdict v;
    v.worst_residual = -HUGE_VAL;
    const ExtReal f1 = f(z1);
    const ExtReal f2 = f(z2);
    if (f1.is_infinite() || f2.is_infinite()) {
        v.detail = "vacuous: +inf endpoint";
        return v;
    }
    for (int i = 1; i <= k; ++i) {
        const double t = static_cast<double>(i) / (k + 1);
        const Vec z = t * z1 + (1.0 - t) * z2;
        const ExtReal fz = f(z);
        const double rhs = t * f1.value() + (1.0 - t) * f2.value();
        const double residual = fz.is_infinite() ? HUGE_VAL : fz.value() - rhs;
        v.worst_residual = std::max(v.worst_residual, residual);
        if (residual > tol && v.passed) {
            v.passed = false;
            v.witness = z;
            v.witness_t = t;
            v.detail = "convexity violated along segment";
        }
    }
    return v;
}

}  // namespace bipot
