#pragma once

#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bipot/bipotential.hpp"

namespace bipot {

/// Compact interval [lo, hi] ⊂ R; parameters are 1-vectors.
struct IntervalSpace {
    double lo = 0.0;
    double hi = 0.0;
};

/// Closed ball B(radius) ⊂ R^dim centred at 0.
struct BallSpace {
    double radius = 0.0;
    Eigen::Index dim = 0;
};

using LambdaSpace = std::variant<IntervalSpace, BallSpace>;

/// Relative slack on Λ membership, absorbing rounding in witness combinations.
inline constexpr double kParamSlack = 1e-12;

bool lambda_space_contains(const LambdaSpace& space, const Vec& lambda);

/// n uniformly spaced points with both endpoints exact (a single point if lo == hi).
std::vector<Vec> interval_grid(double lo, double hi, int n);

/// Centre plus `radii` rings of `angles` points each, radii r_j = R·j/radii.
/// Only the centre when R = 0. Requires dim = 2.
std::vector<Vec> polar_grid(double radius, int angles, int radii);

enum class FrozenSide { freeze_x, freeze_y };

/// Family λ ↦ b_λ over a compact Λ, stored through f(λ, x, y) = b_λ(x, y).
///
/// The witness selectors return the λ of implicit convexity for the two
/// partial functions: witness_x handles f(·, x, ·) (x frozen, y varies) and
/// witness_y handles f(·, ·, y). `candidates`, when set, proposes parameters
/// at which the infimum over the continuum is attained for a given (x, y);
/// inf_envelope and cover_covers scan them in addition to lambda_samples.
struct ConvexCover {
    using Family = std::function<ExtReal(const Vec& lambda, const Vec& x, const Vec& y)>;
    using Witness = std::function<Vec(const Vec& l1, const Vec& z1, const Vec& l2, const Vec& z2, double alpha,
                                      const Vec& fixed)>;
    using Candidates = std::function<std::vector<Vec>(const Vec& x, const Vec& y)>;

    LambdaSpace lambda_space;
    Family family;
    Witness witness_x;
    Witness witness_y;
    std::vector<Vec> lambda_samples;
    Candidates candidates;
    Eigen::Index dim_x = 0;
    Eigen::Index dim_y = 0;
    std::string name;

    Bipotential member_b(const Vec& lambda) const;
};

struct EnvelopeValue {
    ExtReal value;
    std::ptrdiff_t argmin = -1;  // index into lambda_samples, then into candidates; -1 if all +∞
    Vec lambda;
};

/// min over lambda_samples ∪ candidates(x, y) of f(λ, x, y). Ties resolve to
/// the smallest index. This is an upper bound on the exact infimum.
EnvelopeValue envelope_at(const ConvexCover& cover, const Vec& x, const Vec& y);

/// Bipotential x, y ↦ envelope_at(cover, x, y).value.
Bipotential inf_envelope(ConvexCover cover);

struct ImplicitConvexityCase {
    Vec lambda1;
    Vec lambda2;
    Vec z1;
    Vec z2;
    Vec fixed;
    double alpha = 0.5;
    FrozenSide side = FrozenSide::freeze_x;
};

struct ImplicitConvexityVerdict {
    bool passed = true;
    bool vacuous = false;  // right-hand side was +∞
    Vec lambda;
    double residual = 0.0;

    explicit operator bool() const { return passed; }
};

/// α a + (1−α) b with the indicator convention: +∞ on either side gives +∞,
/// whatever the weight. 0·(+∞) is never formed.
ExtReal convex_combination(double alpha, ExtReal a, ExtReal b);

/// Picks λ with the cover's witness selector and checks
/// f(λ, αz1 + (1−α)z2) ≤ α f(λ1, z1) + (1−α) f(λ2, z2) + tol·max(1, |rhs|).
/// Throws std::domain_error if the selector leaves Λ, std::invalid_argument
/// if α ∉ [0, 1].
ImplicitConvexityVerdict check_implicit_convexity(const ConvexCover& cover, const ImplicitConvexityCase& c,
                                                  double tol = kDefaultTol);

struct CoverVerdict {
    bool passed = true;
    std::size_t members = 0;
    std::size_t members_covered = 0;
    std::size_t non_members = 0;
    std::size_t non_members_clear = 0;
    std::vector<PointPair> uncovered_members;   // in M but no λ critical
    std::vector<PointPair> spurious_critical;  // not in M but some λ critical

    explicit operator bool() const { return passed; }
};

/// Sampled check of M = ⋃ M(b_λ): each member pair needs a critical λ among
/// lambda_samples ∪ candidates; no λ may be critical at a non-member pair.
CoverVerdict cover_covers(const ConvexCover& cover, const LawGraph& graph, std::span<const PointPair> samples,
                          double tol = kDefaultTol);

}  // namespace bipot
