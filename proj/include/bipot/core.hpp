#pragma once

#include <Eigen/Dense>

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bipot/ext_real.hpp"

namespace bipot {

/// Point of X = Y = R^n with the Euclidean duality product.
using Vec = Eigen::VectorXd;

/// Absolute tolerance used by all verdict operations unless overridden.
inline constexpr double kDefaultTol = 1e-9;

/// Σ x_i y_i. Throws std::invalid_argument on a dimension mismatch.
double duality(const Vec& x, const Vec& y);

/// 0 if member(p), +∞ otherwise.
ExtReal indicator(const std::function<bool(const Vec&)>& member, const Vec& p);

/// max(alpha, 0).
double positive_part(double alpha);

/// ∃ η ≥ 0 with x = ηy, or y = 0, tested through the Cauchy-Schwarz equality
/// ⟨x,y⟩ ≥ ‖x‖‖y‖ − tol·max(1, ‖x‖‖y‖). Covers x = 0 and y = 0 uniformly.
bool positively_colinear(const Vec& x, const Vec& y, double tol = kDefaultTol);

/// ‖y‖ ≤ radius, the exact closed-ball test shared by every closed form.
bool in_ball(const Vec& y, double radius);

/// Convex lsc function R^n → R ∪ {+∞} together with its effective domain.
struct ConvexFn {
    std::function<ExtReal(const Vec&)> eval;
    std::function<bool(const Vec&)> in_domain;
    Eigen::Index dim = 0;
    std::string name;

    ExtReal operator()(const Vec& x) const;

    /// Domain derived from eval: x ∈ dom f iff f(x) < +∞.
    static ConvexFn from_eval(std::function<ExtReal(const Vec&)> f, Eigen::Index dim, std::string name = {});
};

/// λ‖x‖.
ConvexFn scaled_norm(double lambda, Eigen::Index dim);
/// (λ/2)‖x‖² + ⟨x, a⟩.
ConvexFn shifted_quadratic(double lambda, const Vec& a);
/// (1/2λ)‖y − a‖², the conjugate of shifted_quadratic(λ, a).
ConvexFn shifted_quadratic_conjugate(double lambda, const Vec& a);
/// χ_{B(r)}.
ConvexFn ball_indicator(double radius, Eigen::Index dim);

/// Outcome of a sampled check. PASS is evidence, not proof.
struct Verdict {
    bool passed = true;
    std::optional<Vec> witness;      // failing probe point, when any
    std::optional<double> witness_t;  // failing segment parameter, when any
    double worst_residual = 0.0;    // largest lhs − rhs observed (≤ tol on PASS)
    std::vector<Vec> probes;        // probe set actually used
    std::string detail;

    explicit operator bool() const { return passed; }
};

/// Tests u ∈ ∂f(x) on the probe set: ⟨z − x, u⟩ ≤ f(z) − f(x) + tol for every
/// probe z. Probes with f(z) = +∞ satisfy the inequality trivially.
/// Throws std::invalid_argument if f(x) = +∞ or probes is empty.
Verdict check_subgradient(const ConvexFn& f, const Vec& x, const Vec& u, std::span<const Vec> probes,
                          double tol = kDefaultTol);

/// Tests f(t z1 + (1−t) z2) ≤ t f(z1) + (1−t) f(z2) + tol at
/// t ∈ {1/(k+1), …, k/(k+1)}; +∞ on the right makes the test vacuous.
Verdict check_segment_convexity(const ConvexFn& f, const Vec& z1, const Vec& z2, int k = 3,
                                double tol = kDefaultTol);

void require_same_dim(const Vec& a, const Vec& b, const char* where);

}  // namespace bipot
