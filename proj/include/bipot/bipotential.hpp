#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "bipot/core.hpp"

namespace bipot {

struct PointPair {
    Vec x;
    Vec y;
};

/// b : X × Y → R ∪ {+∞}, convex and lsc in each argument, b(x,y) ≥ ⟨x,y⟩,
/// whose equality set is the constitutive graph. The axioms are a contract
/// checked by verify_axioms, not enforced at construction.
struct Bipotential {
    std::function<ExtReal(const Vec&, const Vec&)> eval;
    Eigen::Index dim_x = 0;
    Eigen::Index dim_y = 0;
    std::string name;

    /// Dimension-checked evaluation.
    ExtReal operator()(const Vec& x, const Vec& y) const;

    /// z ↦ b(z, y).
    ConvexFn partial_x(const Vec& y) const;
    /// w ↦ b(x, w).
    ConvexFn partial_y(const Vec& x) const;
};

/// Constitutive graph M ⊂ X × Y given by a membership predicate.
/// Sections M(x) and M*(y) are expected convex and closed (BB-graph).
struct LawGraph {
    std::function<bool(const Vec&, const Vec&, double)> member;
    std::string description;

    bool contains(const Vec& x, const Vec& y, double tol = kDefaultTol) const { return member(x, y, tol); }
};

/// b(x,y) − ⟨x,y⟩.
ExtReal gap(const Bipotential& b, const Vec& x, const Vec& y);

/// gap ≤ tol·max(1, |⟨x,y⟩|). A gap below −tol is an axiom violation, not
/// criticality, and still returns true here; verify_axioms reports it.
bool is_critical(const Bipotential& b, const Vec& x, const Vec& y, double tol = kDefaultTol);

/// φ(x) + φ*(y). The caller guarantees phi_star is the conjugate of phi.
Bipotential separable(ConvexFn phi, ConvexFn phi_star);

/// ⟨x,y⟩ + χ_M(x,y): critical exactly on M.
Bipotential b_infinity(LawGraph graph, Eigen::Index dim_x, Eigen::Index dim_y);

struct ConvexityFailure {
    Vec x;
    Vec y;
    int argument = 0;  // 0: z ↦ b(z,y) between x_i, x_{i+1}; 1: w ↦ b(x,w) between y_i, y_{i+1}
    double t = 0.0;
    double residual = 0.0;
};

struct EquivalenceFailure {
    Vec x;
    Vec y;
    int direction = 0;  // 0: y ∉ ∂b(·,y)(x); 1: x ∉ ∂b(x,·)(y)
    Vec witness;
};

struct InequalityViolation {
    Vec x;
    Vec y;
    double gap = 0.0;
};

struct AxiomReport {
    std::vector<InequalityViolation> inequality_violations;
    std::vector<ConvexityFailure> convexity_failures;
    std::vector<EquivalenceFailure> equivalence_failures;
    std::size_t samples_used = 0;
    std::size_t critical_pairs = 0;
    std::size_t segment_checks = 0;
    double worst_gap_violation = 0.0;  // most negative gap observed, clipped at 0

    bool passed() const {
        return inequality_violations.empty() && convexity_failures.empty() && equivalence_failures.empty();
    }
};

/// Probe points around a base point.
using ProbeSource = std::function<std::vector<Vec>(const Vec& at)>;

/// Sampled check of the three bipotential axioms:
///  (b) gap ≥ −tol on every pair;
///  (a) segment convexity in each argument between consecutive pairs;
///  (c) on critical pairs, y ∈ ∂b(·,y)(x) and x ∈ ∂b(x,·)(y) on the probes.
/// Throws std::invalid_argument on an empty sample set.
AxiomReport verify_axioms(const Bipotential& b, std::span<const PointPair> samples, const ProbeSource& probes,
                          double tol = kDefaultTol);

}  // namespace bipot
