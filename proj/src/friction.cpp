#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bipot/laws.hpp"

namespace bipot {

void FrictionParams::validate() const {
    if (!(mu_minus > 0.0)) throw std::invalid_argument("friction: mu_minus must be > 0");
    if (!(mu_plus >= mu_minus)) throw std::invalid_argument("friction: need mu_minus <= mu_plus");
}

ContactVec ContactVec::from_vec(const Vec& v) {
    if (v.size() != 3) throw std::invalid_argument("ContactVec: expected 3 components (normal, t1, t2)");
    return {v[0], v[1], v[2]};
}

Vec ContactVec::to_vec() const {
    Vec v(3);
    v << normal, tangential[0], tangential[1];
    return v;
}

double contact_duality(const ContactVec& x, const ContactVec& y) {
    return x.normal * y.normal + x.tangential.dot(y.tangential);
}

bool in_coulomb_cone(const ContactVec& y, double mu) { return y.tangential.norm() <= mu * y.normal; }

bool in_k0_polar(const ContactVec& x) { return x.normal <= 0.0; }

ExtReal coulomb_b(double mu, const ContactVec& x, const ContactVec& y) {
    if (!(mu > 0.0)) throw std::invalid_argument("coulomb_b: mu must be > 0");
    if (!in_coulomb_cone(y, mu) || !in_k0_polar(x)) return ExtReal::infinity();
    return ExtReal(mu * y.normal * x.tangential.norm());
}

namespace {

// Regimes of a pair already known to satisfy x ∈ K₀* and y ∈ K_{μ_hi}.
// Sliding requires μ_lo y_n ≤ ‖y_t‖ and y_t = ‖y_t‖ x_t/‖x_t‖.
ContactRegime admissible_regime(double mu_lo, const ContactVec& x, const ContactVec& y, double tol) {
    const double xt = x.tangential.norm();
    const double yt = y.tangential.norm();
    const bool y_zero = std::hypot(y.normal, yt) <= tol;
    if (x.normal < -tol) return y_zero ? ContactRegime::separation : ContactRegime::off_graph;
    if (xt <= tol) return ContactRegime::sticking;
    if (yt < mu_lo * y.normal - tol) return ContactRegime::off_graph;
    const Eigen::Vector2d expected = (yt / xt) * x.tangential;
    if ((y.tangential - expected).norm() > tol * std::max(1.0, yt)) return ContactRegime::off_graph;
    return ContactRegime::sliding;
}

bool on_graph(ContactRegime r) {
    return r == ContactRegime::separation || r == ContactRegime::sticking || r == ContactRegime::sliding;
}

}  // namespace

bool coulomb_member(double mu, const ContactVec& x, const ContactVec& y, double tol) {
    if (!(mu > 0.0)) throw std::invalid_argument("coulomb_member: mu must be > 0");
    if (!in_coulomb_cone(y, mu) || !in_k0_polar(x)) return false;
    const double xt = x.tangential.norm();
    if (x.normal < -tol) return std::hypot(y.normal, y.tangential.norm()) <= tol;
    if (xt <= tol) return true;
    const Eigen::Vector2d expected = mu * y.normal * x.tangential / xt;
    return (y.tangential - expected).norm() <= tol * std::max(1.0, expected.norm());
}

ExtReal friction_b(const FrictionParams& p, const ContactVec& x, const ContactVec& y) {
    if (!in_coulomb_cone(y, p.mu_plus) || !in_k0_polar(x)) return ExtReal::infinity();
    return ExtReal(std::max(p.mu_minus * y.normal, y.tangential.norm()) * x.tangential.norm());
}

ContactRegime friction_regime(const FrictionParams& p, const ContactVec& x, const ContactVec& y, double tol) {
    if (!in_coulomb_cone(y, p.mu_plus) || !in_k0_polar(x)) return ContactRegime::inadmissible;
    return admissible_regime(p.mu_minus, x, y, tol);
}

bool friction_member(const FrictionParams& p, const ContactVec& x, const ContactVec& y, double tol) {
    return on_graph(friction_regime(p, x, y, tol));
}

const char* to_string(ContactRegime r) {
    switch (r) {
        case ContactRegime::separation: return "separation";
        case ContactRegime::sticking: return "sticking";
        case ContactRegime::sliding: return "sliding";
        case ContactRegime::off_graph: return "off-graph";
        case ContactRegime::inadmissible: return "inadmissible";
    }
    return "unknown";
}

ConvexCover friction_cover(const FrictionParams& p, int points, bool refine) {
    p.validate();
    ConvexCover c;
    c.name = "friction_cover";
    const double lo = p.mu_minus;
    const double hi = p.mu_plus;
    c.lambda_space = IntervalSpace{lo, hi};
    c.dim_x = c.dim_y = 3;
    c.lambda_samples = interval_grid(lo, hi, points);
    c.family = [](const Vec& mu, const Vec& x, const Vec& y) {
        return coulomb_b(mu[0], ContactVec::from_vec(x), ContactVec::from_vec(y));
    };
    // x frozen: the y_n-weighted mean keeps μ(αy1_n + βy2_n) equal to
    // αμ1 y1_n + βμ2 y2_n, and the combined reaction stays in K_μ.
    c.witness_x = [](const Vec& l1, const Vec& y1, const Vec& l2, const Vec& y2, double alpha, const Vec&) -> Vec {
        const double w1 = alpha * y1[0];
        const double w2 = (1.0 - alpha) * y2[0];
        if (y1[0] < 0.0 || y2[0] < 0.0 || !(w1 + w2 > 0.0)) return Vec::Constant(1, std::min(l1[0], l2[0]));
        return Vec::Constant(1, (w1 * l1[0] + w2 * l2[0]) / (w1 + w2));
    };
    // y frozen: K_{μ1} ∩ K_{μ2} = K_{min}.
    c.witness_y = [](const Vec& l1, const Vec&, const Vec& l2, const Vec&, double, const Vec&) -> Vec {
        return Vec::Constant(1, std::min(l1[0], l2[0]));
    };
    if (refine) {
        c.candidates = [lo, hi](const Vec&, const Vec& y) {
            double mu = lo;
            if (y[0] > 0.0) {
                const double ratio = y.tail<2>().norm() / y[0];
                // Round up so that ‖y_t‖ ≤ μ y_n survives the division.
                mu = std::clamp(ratio * (1.0 + 4.0 * std::numeric_limits<double>::epsilon()), lo, hi);
            }
            return std::vector<Vec>{Vec::Constant(1, mu)};
        };
    }
    return c;
}

Bipotential coulomb_bipotential(double mu) {
    if (!(mu > 0.0)) throw std::invalid_argument("coulomb: mu must be > 0");
    return {[mu](const Vec& x, const Vec& y) {
                return coulomb_b(mu, ContactVec::from_vec(x), ContactVec::from_vec(y));
            },
            3, 3, "coulomb"};
}

LawGraph coulomb_graph(double mu) {
    return {[mu](const Vec& x, const Vec& y, double tol) {
                return coulomb_member(mu, ContactVec::from_vec(x), ContactVec::from_vec(y), tol);
            },
            "Coulomb friction graph"};
}

Bipotential friction_bipotential(const FrictionParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y) {
                return friction_b(p, ContactVec::from_vec(x), ContactVec::from_vec(y));
            },
            3, 3, "friction"};
}

LawGraph friction_graph(const FrictionParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y, double tol) {
                return friction_member(p, ContactVec::from_vec(x), ContactVec::from_vec(y), tol);
            },
            "blurred Coulomb friction graph, mu in [mu-, mu+]"};
}

}  // namespace bipot
