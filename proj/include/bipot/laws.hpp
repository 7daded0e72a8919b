#pragma once

#include <string>

#include "bipot/bipotential.hpp"
#include "bipot/cover.hpp"

namespace bipot {

// ---------------------------------------------------------------------------
// Elasticity with a thick line: ‖y − λx‖ ≤ ε.
// ---------------------------------------------------------------------------

struct ElasticParams {
    double lambda = 1.0;   // elastic modulus
    double epsilon = 0.25; // tolerance on the residual y − λx; 0 gives the ideal law
    Eigen::Index n = 2;

    void validate() const;
};

/// ⟨x,y⟩ + (1/2λ)((‖y − λx‖ − ε)₊)².
double elastic_b(const ElasticParams& p, const Vec& x, const Vec& y);

/// ‖y − λx‖ ≤ ε + tol.
bool elastic_member(const ElasticParams& p, const Vec& x, const Vec& y, double tol = kDefaultTol);

/// Cover member with initial stress a: ⟨x,y⟩ + (1/2λ)‖y − a − λx‖².
/// Throws std::domain_error if ‖a‖ > ε.
double elastic_cover_b(const ElasticParams& p, const Vec& a, const Vec& x, const Vec& y);

struct ElasticStationarity {
    Vec a;       // minimiser on the sphere ‖a‖ = ε
    double eta;  // Lagrange multiplier of the constraint ‖a‖² ≤ ε²
};

/// Constrained minimiser of a ↦ b_a(x,y) when ‖y − λx‖ > ε:
/// a = (y − λx)/(1 + 2η), η = ((1/ε)‖y − λx‖ − 1)/2.
/// Throws std::domain_error on the interior branch ‖y − λx‖ ≤ ε (where the
/// minimiser is a = y − λx) and when ε = 0.
ElasticStationarity elastic_stationarity(const ElasticParams& p, const Vec& x, const Vec& y);

/// Cover a ∈ B(ε) ↦ b_a on a polar grid. With `refine`, the exact minimiser
/// (projection of y − λx on B(ε)) is offered as a candidate.
ConvexCover elastic_cover(const ElasticParams& p, int angles = 64, int radii = 128, bool refine = true);

Bipotential elastic_bipotential(const ElasticParams& p);
LawGraph elastic_graph(const ElasticParams& p);
std::string elastic_regime(const ElasticParams& p, const Vec& x, const Vec& y);

// ---------------------------------------------------------------------------
// Plasticity with a blurred yield threshold η ∈ [λ − ε, λ + ε].
// ---------------------------------------------------------------------------

struct PlasticParams {
    double lambda = 1.0;    // yield threshold
    double epsilon = 0.25;  // 0 ≤ ε < λ; 0 gives the ideal law
    Eigen::Index n = 2;

    double lambda_minus() const { return lambda - epsilon; }
    double lambda_plus() const { return lambda + epsilon; }
    void validate() const;
};

/// max(λ₋, ‖y‖)‖x‖ + χ_{B(λ₊)}(y).
ExtReal plastic_b(const PlasticParams& p, const Vec& x, const Vec& y);

/// Critical set of plastic_b: (x = 0 and ‖y‖ ≤ λ₊) or
/// (λ₋ ≤ ‖y‖ ≤ λ₊ and x = ηy, η ≥ 0). The ball test is exact, equalities
/// are tested within tol.
bool plastic_member(const PlasticParams& p, const Vec& x, const Vec& y, double tol = kDefaultTol);

/// η‖x‖ + χ_{B(η)}(y). Throws std::domain_error if η ∉ [λ₋, λ₊].
ExtReal plastic_cover_b(const PlasticParams& p, double eta, const Vec& x, const Vec& y);

ConvexCover plastic_cover(const PlasticParams& p, int points = 1001, bool refine = true);

Bipotential plastic_bipotential(const PlasticParams& p);
LawGraph plastic_graph(const PlasticParams& p);
std::string plastic_regime(const PlasticParams& p, const Vec& x, const Vec& y);

// ---------------------------------------------------------------------------
// Unilateral contact with Coulomb friction, coefficient μ ∈ [μ₋, μ₊].
// ---------------------------------------------------------------------------

struct FrictionParams {
    double mu_minus = 0.2;
    double mu_plus = 0.4;

    void validate() const;
};

/// (normal, tangential) split of R × R². For x: gap velocity and sliding
/// velocity. For y: contact pressure and minus the friction stress.
struct ContactVec {
    double normal = 0.0;
    Eigen::Vector2d tangential = Eigen::Vector2d::Zero();

    ContactVec() = default;
    ContactVec(double n, double t1, double t2) : normal(n), tangential(t1, t2) {}

    /// Throws std::invalid_argument unless v has 3 components.
    static ContactVec from_vec(const Vec& v);
    Vec to_vec() const;
};

double contact_duality(const ContactVec& x, const ContactVec& y);

/// y ∈ K_μ: ‖y_t‖ ≤ μ y_n.
bool in_coulomb_cone(const ContactVec& y, double mu);
/// x ∈ K₀*: x_n ≤ 0.
bool in_k0_polar(const ContactVec& x);

/// μ y_n ‖x_t‖ + χ_{K_μ}(y) + χ_{K₀*}(x).
ExtReal coulomb_b(double mu, const ContactVec& x, const ContactVec& y);
/// Separation ∪ sticking ∪ sliding, closed inequalities, equalities within tol.
bool coulomb_member(double mu, const ContactVec& x, const ContactVec& y, double tol = kDefaultTol);

/// max(μ₋ y_n, ‖y_t‖)‖x_t‖ + χ_{K_{μ₊}}(y) + χ_{K₀*}(x).
ExtReal friction_b(const FrictionParams& p, const ContactVec& x, const ContactVec& y);
/// Critical set of friction_b: separation (x_n < 0, y = 0), sticking
/// (x = 0, y ∈ K_{μ₊}), sliding (x_n = 0, x_t ≠ 0, μ₋ y_n ≤ ‖y_t‖ ≤ μ₊ y_n,
/// y_t positively colinear with x_t).
bool friction_member(const FrictionParams& p, const ContactVec& x, const ContactVec& y, double tol = kDefaultTol);

enum class ContactRegime { separation, sticking, sliding, off_graph, inadmissible };
const char* to_string(ContactRegime r);
ContactRegime friction_regime(const FrictionParams& p, const ContactVec& x, const ContactVec& y,
                              double tol = kDefaultTol);

/// μ ∈ [μ₋, μ₊] ↦ coulomb_b(μ) on a uniform grid.
ConvexCover friction_cover(const FrictionParams& p, int points = 1001, bool refine = true);

Bipotential coulomb_bipotential(double mu);
LawGraph coulomb_graph(double mu);
Bipotential friction_bipotential(const FrictionParams& p);
LawGraph friction_graph(const FrictionParams& p);

}  // namespace bipot
