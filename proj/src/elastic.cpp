#include <cmath>
#include <stdexcept>

#include "bipot/laws.hpp"

namespace bipot {

void ElasticParams::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("elastic: lambda must be > 0");
    if (!(epsilon >= 0.0)) throw std::invalid_argument("elastic: epsilon must be >= 0");
    if (n < 1) throw std::invalid_argument("elastic: dimension must be >= 1");
}

namespace {

void check_dims(const ElasticParams& p, const Vec& x, const Vec& y) {
    if (x.size() != p.n || y.size() != p.n) throw std::invalid_argument("elastic: dimension mismatch");
}

}  // namespace

double elastic_b(const ElasticParams& p, const Vec& x, const Vec& y) {
    check_dims(p, x, y);
    const double excess = positive_part((y - p.lambda * x).norm() - p.epsilon);
    return x.dot(y) + excess * excess / (2.0 * p.lambda);
}

bool elastic_member(const ElasticParams& p, const Vec& x, const Vec& y, double tol) {
    check_dims(p, x, y);
    return (y - p.lambda * x).norm() <= p.epsilon + tol;
}

double elastic_cover_b(const ElasticParams& p, const Vec& a, const Vec& x, const Vec& y) {
    check_dims(p, x, y);
    if (a.size() != p.n) throw std::invalid_argument("elastic_cover_b: dimension mismatch");
    if (!lambda_space_contains(BallSpace{p.epsilon, p.n}, a)) {
        throw std::domain_error("elastic_cover_b: initial stress outside B(epsilon)");
    }
    return x.dot(y) + (y - a - p.lambda * x).squaredNorm() / (2.0 * p.lambda);
}

ElasticStationarity elastic_stationarity(const ElasticParams& p, const Vec& x, const Vec& y) {
    check_dims(p, x, y);
    const Vec r = y - p.lambda * x;
    const double nr = r.norm();
    if (!(nr > p.epsilon)) throw std::domain_error("elastic_stationarity: interior branch, minimiser is a = y - lambda x");
    if (p.epsilon == 0.0) throw std::domain_error("elastic_stationarity: multiplier unbounded for epsilon = 0");
    const double eta = 0.5 * (nr / p.epsilon - 1.0);
    return {r / (1.0 + 2.0 * eta), eta};
}

ConvexCover elastic_cover(const ElasticParams& p, int angles, int radii, bool refine) {
    p.validate();
    if (p.n != 2) throw std::invalid_argument("elastic_cover: polar grid requires n = 2");
    ConvexCover c;
    c.name = "elastic_cover";
    c.lambda_space = BallSpace{p.epsilon, p.n};
    c.dim_x = c.dim_y = p.n;
    c.lambda_samples = polar_grid(p.epsilon, angles, radii);
    c.family = [p](const Vec& a, const Vec& x, const Vec& y) {
        return ExtReal(x.dot(y) + (y - a - p.lambda * x).squaredNorm() / (2.0 * p.lambda));
    };
    // Both partial functions are convex quadratics in (a, z) jointly.
    auto combine = [](const Vec& a1, const Vec&, const Vec& a2, const Vec&, double alpha, const Vec&) -> Vec {
        return alpha * a1 + (1.0 - alpha) * a2;
    };
    c.witness_x = combine;
    c.witness_y = combine;
    if (refine) {
        c.candidates = [p](const Vec& x, const Vec& y) {
            Vec r = y - p.lambda * x;
            const double nr = r.norm();
            if (nr > p.epsilon) r *= p.epsilon / nr;
            return std::vector<Vec>{std::move(r)};
        };
    }
    return c;
}

Bipotential elastic_bipotential(const ElasticParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y) { return ExtReal(elastic_b(p, x, y)); }, p.n, p.n, "elastic"};
}

LawGraph elastic_graph(const ElasticParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y, double tol) { return elastic_member(p, x, y, tol); },
            "blurred elastic graph |y - lambda x| <= eps"};
}

std::string elastic_regime(const ElasticParams& p, const Vec& x, const Vec& y) {
    return elastic_member(p, x, y) ? "inside thick line" : "outside thick line";
}

}  // namespace bipot
