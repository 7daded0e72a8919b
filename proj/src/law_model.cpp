#include "bipot/law_model.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace bipot {

const char* to_string(LawKind k) {
    switch (k) {
        case LawKind::elastic: return "elastic";
        case LawKind::plastic: return "plastic";
        case LawKind::coulomb: return "coulomb";
        case LawKind::friction: return "friction";
    }
    return "unknown";
}

LawKind parse_law_kind(const std::string& name) {
    if (name == "elastic") return LawKind::elastic;
    if (name == "plastic") return LawKind::plastic;
    if (name == "coulomb") return LawKind::coulomb;
    if (name == "friction") return LawKind::friction;
    throw std::invalid_argument("unknown law '" + name + "' (expected elastic, plastic, coulomb or friction)");
}

std::optional<PointPair> LawModel::off_graph_pair(Rng& rng, double margin, int max_tries) const {
    for (int i = 0; i < max_tries; ++i) {
        PointPair p = random_pair(rng);
        const ExtReal g = gap(closed_form, p.x, p.y);
        if (g.is_finite() && g.value() > margin) return p;
    }
    return std::nullopt;
}

namespace {

Vec vec2(double a, double b) {
    Vec v(2);
    v << a, b;
    return v;
}

Vec vec3(double a, double b, double c) {
    Vec v(3);
    v << a, b, c;
    return v;
}

double unit_open(Rng& rng) { return uniform(rng, 0.0, 1.0); }

bool coin(Rng& rng, double p) { return unit_open(rng) < p; }

Vec tangential_in_cone(Rng& rng, double y_n, double mu) {
    return unit_open(rng) * mu * y_n * uniform_sphere(rng, 2, 1.0);
}

}  // namespace

PointPair contact_pair(Rng& rng, double h, double mu_hi) {
    if (coin(rng, 0.5)) return {uniform_box(rng, 3, h), uniform_box(rng, 3, h)};
    const double xn = coin(rng, 0.25) ? 0.0 : uniform(rng, -h, 0.0);
    const Vec xt = uniform_box(rng, 2, h);
    const double yn = uniform(rng, 0.0, h);
    const double ratio = uniform(rng, 0.0, 1.25 * mu_hi);
    Vec dir = uniform_sphere(rng, 2, 1.0);
    if (coin(rng, 0.3) && xt.norm() > 0.0) dir = xt / xt.norm();
    const Vec yt = ratio * yn * dir;
    return {vec3(xn, xt[0], xt[1]), vec3(yn, yt[0], yt[1])};
}

LawModel make_elastic_model(const ElasticParams& p, double box, int angles, int radii) {
    p.validate();
    LawModel m;
    m.kind = LawKind::elastic;
    m.dim = p.n;
    m.box = box;
    m.closed_form = elastic_bipotential(p);
    m.graph = elastic_graph(p);
    m.cover = elastic_cover(p, angles, radii, true);
    m.grid_cover = elastic_cover(p, angles, radii, false);
    m.envelope_error_bound = [p, angles, radii](const Vec& x, const Vec& y) {
        // Any minimiser lies within d of a grid point: half a radial step plus
        // an arc of half the angular step on the outer ring.
        const double d = 0.5 * p.epsilon / radii + p.epsilon * std::numbers::pi / angles;
        const double excess = positive_part((y - p.lambda * x).norm() - p.epsilon);
        return (2.0 * excess * d + d * d) / (2.0 * p.lambda);
    };
    m.regime = [p](const Vec& x, const Vec& y) { return elastic_regime(p, x, y); };

    const auto n = p.n;
    m.random_pair = [n, box](Rng& rng) { return PointPair{uniform_box(rng, n, box), uniform_box(rng, n, box)}; };
    m.on_graph_pair = [p, box](Rng& rng) {
        Vec x = uniform_box(rng, p.n, box);
        Vec y = p.lambda * x + uniform_ball(rng, p.n, p.epsilon);
        return PointPair{std::move(x), std::move(y)};
    };
    m.boundary_pair = [p, box](Rng& rng) {
        Vec x = uniform_box(rng, p.n, box);
        Vec y = p.lambda * x + uniform_sphere(rng, p.n, p.epsilon);
        return PointPair{std::move(x), std::move(y)};
    };
    m.implicit_case = [p, box](Rng& rng, FrozenSide side) {
        ImplicitConvexityCase c;
        c.side = side;
        c.lambda1 = uniform_ball(rng, p.n, p.epsilon);
        c.lambda2 = uniform_ball(rng, p.n, p.epsilon);
        c.z1 = uniform_box(rng, p.n, box);
        c.z2 = uniform_box(rng, p.n, box);
        c.fixed = uniform_box(rng, p.n, box);
        c.alpha = unit_open(rng);
        return c;
    };
    m.embed = [](double s, double t) { return PointPair{vec2(s, 0.0), vec2(t, 0.0)}; };
    const Vec a = vec2(p.epsilon, 0.0);
    m.fenchel_pairs.push_back({shifted_quadratic(p.lambda, a), shifted_quadratic_conjugate(p.lambda, a),
                               "initial-stress potential and its conjugate"});
    return m;
}

LawModel make_plastic_model(const PlasticParams& p, double box, int points) {
    p.validate();
    LawModel m;
    m.kind = LawKind::plastic;
    m.dim = p.n;
    m.box = box;
    m.closed_form = plastic_bipotential(p);
    m.graph = plastic_graph(p);
    m.cover = plastic_cover(p, points, true);
    m.grid_cover = plastic_cover(p, points, false);
    const double h = p.epsilon > 0.0 ? 2.0 * p.epsilon / (points - 1) : 0.0;
    m.envelope_error_bound = [h](const Vec& x, const Vec&) { return h * x.norm(); };
    m.regime = [p](const Vec& x, const Vec& y) { return plastic_regime(p, x, y); };

    const auto n = p.n;
    const double lm = p.lambda_minus();
    const double lp = p.lambda_plus();
    m.random_pair = [n, box](Rng& rng) { return PointPair{uniform_box(rng, n, box), uniform_box(rng, n, box)}; };
    m.on_graph_pair = [n, lm, lp](Rng& rng) {
        if (coin(rng, 0.3)) return PointPair{Vec::Zero(n), uniform_ball(rng, n, lp)};
        Vec y = uniform_sphere(rng, n, uniform(rng, lm, lp));
        Vec x = uniform(rng, 0.0, 1.5) * y;
        return PointPair{std::move(x), std::move(y)};
    };
    m.boundary_pair = [n, lm, lp](Rng& rng) {
        const Vec u = uniform_sphere(rng, n, 1.0);
        const double eta = uniform(rng, 0.0, 1.5);
        const Vec other = uniform_sphere(rng, n, uniform(rng, 0.1, 2.0));
        switch (static_cast<int>(uniform(rng, 0.0, 8.0))) {
            case 0: return PointPair{eta * lm * u, lm * u};          // lower threshold, flowing
            case 1: return PointPair{eta * lp * u, lp * u};          // upper threshold, flowing
            case 2: return PointPair{Vec::Zero(n), lp * u};          // rigid, stress on the outer sphere
            case 3: return PointPair{Vec::Zero(n), lm * u};          // rigid, stress on the inner sphere
            case 4: return PointPair{other, lp * u};                 // outer sphere, arbitrary rate
            case 5: return PointPair{other, lm * u};                 // inner sphere, arbitrary rate
            case 6: return PointPair{-eta * lm * u, lm * u};         // anti-colinear
            default: return PointPair{eta * u, lp * (1.0 + 1e-3) * u};  // just outside B(λ+)
        }
    };
    m.implicit_case = [n, lm, lp, box](Rng& rng, FrozenSide side) {
        ImplicitConvexityCase c;
        c.side = side;
        const double e1 = uniform(rng, lm, lp);
        const double e2 = uniform(rng, lm, lp);
        c.lambda1 = Vec::Constant(1, e1);
        c.lambda2 = Vec::Constant(1, e2);
        c.alpha = unit_open(rng);
        if (side == FrozenSide::freeze_x) {
            c.fixed = uniform_box(rng, n, box);
            c.z1 = coin(rng, 0.8) ? uniform_ball(rng, n, e1) : uniform_box(rng, n, box);
            c.z2 = coin(rng, 0.8) ? uniform_ball(rng, n, e2) : uniform_box(rng, n, box);
        } else {
            c.fixed = coin(rng, 0.8) ? uniform_ball(rng, n, std::min(e1, e2)) : uniform_box(rng, n, box);
            c.z1 = uniform_box(rng, n, box);
            c.z2 = uniform_box(rng, n, box);
        }
        return c;
    };
    m.embed = [](double s, double t) { return PointPair{vec2(s, 0.0), vec2(t, 0.0)}; };
    m.fenchel_pairs.push_back(
        {scaled_norm(p.lambda, p.n), ball_indicator(p.lambda, p.n), "dissipation potential and its conjugate"});
    return m;
}

namespace {

LawModel contact_model(LawKind kind, const FrictionParams& p, double box, int points) {
    LawModel m;
    m.kind = kind;
    m.dim = 3;
    m.box = box;
    const double lo = p.mu_minus;
    const double hi = p.mu_plus;
    if (kind == LawKind::coulomb) {
        m.closed_form = coulomb_bipotential(hi);
        m.graph = coulomb_graph(hi);
        m.regime = [hi](const Vec& x, const Vec& y) {
            const auto cx = ContactVec::from_vec(x);
            const auto cy = ContactVec::from_vec(y);
            return std::string(to_string(friction_regime({hi, hi}, cx, cy)));
        };
    } else {
        m.closed_form = friction_bipotential(p);
        m.graph = friction_graph(p);
        m.regime = [p](const Vec& x, const Vec& y) {
            return std::string(to_string(friction_regime(p, ContactVec::from_vec(x), ContactVec::from_vec(y))));
        };
    }
    m.cover = friction_cover(p, points, true);
    m.grid_cover = friction_cover(p, points, false);
    const double h = hi > lo ? (hi - lo) / (points - 1) : 0.0;
    m.envelope_error_bound = [h](const Vec& x, const Vec& y) {
        return h * std::max(y[0], 0.0) * x.tail<2>().norm();
    };

    m.random_pair = [box, hi](Rng& rng) { return contact_pair(rng, box, hi); };
    m.on_graph_pair = [box, lo, hi](Rng& rng) {
        const double pick = unit_open(rng);
        if (pick < 0.2) {
            const Vec xt = uniform_box(rng, 2, box);
            return PointPair{vec3(uniform(rng, -box, 0.0), xt[0], xt[1]), Vec::Zero(3)};
        }
        if (pick < 0.5) {
            const double yn = uniform(rng, 0.0, box);
            const Vec yt = tangential_in_cone(rng, yn, hi);
            return PointPair{Vec::Zero(3), vec3(yn, yt[0], yt[1])};
        }
        Vec xt = uniform_box(rng, 2, box);
        if (xt.norm() == 0.0) xt[0] = 1.0;
        const double yn = uniform(rng, 0.0, box);
        // Pull in by a few ulps so that rounding cannot leave K_{μ+}.
        const double mu = uniform(rng, lo, hi) * (1.0 - 4.0 * std::numeric_limits<double>::epsilon());
        const Vec yt = mu * yn * (xt / xt.norm());
        return PointPair{vec3(0.0, xt[0], xt[1]), vec3(yn, yt[0], yt[1])};
    };
    m.boundary_pair = [box, lo, hi](Rng& rng) {
        Vec xt = uniform_box(rng, 2, box);
        if (xt.norm() == 0.0) xt[0] = 1.0;
        const Vec dir = xt / xt.norm();
        const Vec u = uniform_sphere(rng, 2, 1.0);
        const double yn = uniform(rng, 0.0, box);
        const double xn = uniform(rng, -box, -0.01);
        auto pair = [](double xn_, const Vec& xt_, double yn_, const Vec& yt_) {
            return PointPair{vec3(xn_, xt_[0], xt_[1]), vec3(yn_, yt_[0], yt_[1])};
        };
        const Vec zero2 = Vec::Zero(2);
        switch (static_cast<int>(uniform(rng, 0.0, 8.0))) {
            case 0: return pair(0.0, zero2, yn, hi * yn * u);             // sticking on the cone edge
            case 1: return pair(0.0, xt, yn, hi * yn * dir);              // sliding at μ+
            case 2: return pair(0.0, xt, yn, lo * yn * dir);              // sliding at μ−
            case 3: return pair(0.0, xt, 0.0, zero2);                      // gap closed, no reaction
            case 4: return pair(xn, xt, 0.0, zero2);                       // separation
            case 5: return pair(xn, xt, yn, hi * yn * u);                  // separating with reaction
            case 6: return pair(0.0, xt, yn, -hi * yn * dir);              // sliding against friction
            default: return pair(0.0, xt, yn, hi * (1.0 + 1e-3) * yn * dir);  // just outside K_{μ+}
        }
    };
    m.implicit_case = [box, lo, hi](Rng& rng, FrozenSide side) {
        ImplicitConvexityCase c;
        c.side = side;
        const double m1 = uniform(rng, lo, hi);
        const double m2 = uniform(rng, lo, hi);
        c.lambda1 = Vec::Constant(1, m1);
        c.lambda2 = Vec::Constant(1, m2);
        c.alpha = unit_open(rng);
        auto admissible_x = [&] {
            Vec x = uniform_box(rng, 3, box);
            if (coin(rng, 0.8)) x[0] = -std::abs(x[0]);
            return x;
        };
        auto reaction = [&](double mu) {
            if (!coin(rng, 0.8)) return uniform_box(rng, 3, box);
            const double yn = uniform(rng, 0.0, box);
            const Vec yt = tangential_in_cone(rng, yn, mu);
            return vec3(yn, yt[0], yt[1]);
        };
        if (side == FrozenSide::freeze_x) {
            c.fixed = admissible_x();
            c.z1 = reaction(m1);
            c.z2 = reaction(m2);
        } else {
            c.fixed = reaction(std::min(m1, m2));
            c.z1 = admissible_x();
            c.z2 = admissible_x();
        }
        return c;
    };
    m.embed = [](double s, double t) { return PointPair{vec3(0.0, s, 0.0), vec3(1.0, t, 0.0)}; };
    return m;
}

}  // namespace

LawModel make_coulomb_model(double mu, double box) {
    if (!(mu > 0.0)) throw std::invalid_argument("coulomb: mu must be > 0");
    return contact_model(LawKind::coulomb, FrictionParams{mu, mu}, box, 1);
}

LawModel make_friction_model(const FrictionParams& p, double box, int points) {
    p.validate();
    return contact_model(LawKind::friction, p, box, points);
}

}  // namespace bipot
