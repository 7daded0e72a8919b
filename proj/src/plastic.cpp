#include <algorithm>
#include <stdexcept>

#include "bipot/laws.hpp"

namespace bipot {

void PlasticParams::validate() const {
    if (!(lambda > 0.0)) throw std::invalid_argument("plastic: lambda must be > 0");
    if (!(epsilon >= 0.0 && epsilon < lambda)) throw std::invalid_argument("plastic: need 0 <= epsilon < lambda");
    if (n < 1) throw std::invalid_argument("plastic: dimension must be >= 1");
}

namespace {

void check_dims(const PlasticParams& p, const Vec& x, const Vec& y) {
    if (x.size() != p.n || y.size() != p.n) throw std::invalid_argument("plastic: dimension mismatch");
}

ExtReal threshold_b(double eta, const Vec& x, const Vec& y) {
    if (!in_ball(y, eta)) return ExtReal::infinity();
    return ExtReal(eta * x.norm());
}

}  // namespace

ExtReal plastic_b(const PlasticParams& p, const Vec& x, const Vec& y) {
    check_dims(p, x, y);
    if (!in_ball(y, p.lambda_plus())) return ExtReal::infinity();
    return ExtReal(std::max(p.lambda_minus(), y.norm()) * x.norm());
}

bool plastic_member(const PlasticParams& p, const Vec& x, const Vec& y, double tol) {
    check_dims(p, x, y);
    if (!in_ball(y, p.lambda_plus())) return false;
    if (x.norm() <= tol) return true;
    return y.norm() >= p.lambda_minus() - tol && positively_colinear(x, y, tol);
}

ExtReal plastic_cover_b(const PlasticParams& p, double eta, const Vec& x, const Vec& y) {
    check_dims(p, x, y);
    if (!lambda_space_contains(IntervalSpace{p.lambda_minus(), p.lambda_plus()}, Vec::Constant(1, eta))) {
        throw std::domain_error("plastic_cover_b: threshold outside [lambda-, lambda+]");
    }
    return threshold_b(eta, x, y);
}

ConvexCover plastic_cover(const PlasticParams& p, int points, bool refine) {
    p.validate();
    ConvexCover c;
    c.name = "plastic_cover";
    const double lo = p.lambda_minus();
    const double hi = p.lambda_plus();
    c.lambda_space = IntervalSpace{lo, hi};
    c.dim_x = c.dim_y = p.n;
    c.lambda_samples = interval_grid(lo, hi, points);
    c.family = [](const Vec& eta, const Vec& x, const Vec& y) { return threshold_b(eta[0], x, y); };
    // x frozen: y_i ∈ B(η_i) gives αy1 + βy2 ∈ B(αη1 + βη2).
    c.witness_x = [](const Vec& l1, const Vec&, const Vec& l2, const Vec&, double alpha, const Vec&) -> Vec {
        return Vec::Constant(1, alpha * l1[0] + (1.0 - alpha) * l2[0]);
    };
    // y frozen: y ∈ B(η1) ∩ B(η2) = B(min).
    c.witness_y = [](const Vec& l1, const Vec&, const Vec& l2, const Vec&, double, const Vec&) -> Vec {
        return Vec::Constant(1, std::min(l1[0], l2[0]));
    };
    if (refine) {
        c.candidates = [lo, hi](const Vec&, const Vec& y) {
            return std::vector<Vec>{Vec::Constant(1, std::clamp(y.norm(), lo, hi))};
        };
    }
    return c;
}

Bipotential plastic_bipotential(const PlasticParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y) { return plastic_b(p, x, y); }, p.n, p.n, "plastic"};
}

LawGraph plastic_graph(const PlasticParams& p) {
    p.validate();
    return {[p](const Vec& x, const Vec& y, double tol) { return plastic_member(p, x, y, tol); },
            "blurred plastic graph, thresholds in [lambda-, lambda+]"};
}

std::string plastic_regime(const PlasticParams& p, const Vec& x, const Vec& y) {
    if (!in_ball(y, p.lambda_plus())) return "inadmissible stress";
    if (!plastic_member(p, x, y)) return "off-graph";
    return x.norm() <= kDefaultTol ? "rigid" : "plastic flow";
}

}  // namespace bipot
