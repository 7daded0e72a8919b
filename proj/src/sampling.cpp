#include "bipot/sampling.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bipot {

double uniform(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

Vec uniform_box(Rng& rng, Eigen::Index n, double half_width) {
    Vec v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = uniform(rng, -half_width, half_width);
    return v;
}

Vec uniform_ball(Rng& rng, Eigen::Index n, double radius) {
    for (;;) {
        Vec v = uniform_box(rng, n, 1.0);
        if (v.squaredNorm() <= 1.0) return radius * v;
    }
}

Vec uniform_sphere(Rng& rng, Eigen::Index n, double radius) {
    for (;;) {
        Vec v = uniform_box(rng, n, 1.0);
        const double nv = v.norm();
        if (nv > 1e-3 && nv <= 1.0) return (radius / nv) * v;
    }
}

namespace {

std::vector<Vec> directions(Eigen::Index n, int count) {
    std::vector<Vec> out;
    out.reserve(static_cast<std::size_t>(count));
    if (n == 2) {
        for (int i = 0; i < count; ++i) {
            const double th = 2.0 * std::numbers::pi * (i + 0.5) / count;
            Vec d(2);
            d << std::cos(th), std::sin(th);
            out.push_back(std::move(d));
        }
    } else if (n == 3) {
        // Fibonacci sphere.
        const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
        for (int i = 0; i < count; ++i) {
            const double z = 1.0 - 2.0 * (i + 0.5) / count;
            const double r = std::sqrt(1.0 - z * z);
            Vec d(3);
            d << z, r * std::cos(golden * i), r * std::sin(golden * i);
            out.push_back(std::move(d));
        }
    } else {
        throw std::invalid_argument("ring_probes: only n = 2 or 3 supported");
    }
    return out;
}

}  // namespace

std::vector<Vec> ring_probes(const Vec& at) {
    const Eigen::Index n = at.size();
    std::vector<Vec> probes{Vec::Zero(n), 0.5 * at, 2.0 * at, -at};
    const auto radii = n == 2 ? std::vector<double>{1e-3, 1e-2, 0.05, 0.2, 0.5, 1.5}
                              : std::vector<double>{1e-3, 1e-2, 0.2, 1.0};
    const int count = n == 2 ? 16 : 24;
    const auto dirs = directions(n, count);
    for (double r : radii) {
        for (const Vec& d : dirs) probes.push_back(at + r * d);
    }
    return probes;
}

ProbeSource standard_probes() {
    return [](const Vec& at) { return ring_probes(at); };
}

}  // namespace bipot
