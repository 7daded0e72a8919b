#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "bipot/core.hpp"
#include "helpers.hpp"

using namespace bipot;
using testing::vec;

TEST_CASE("ExtReal arithmetic keeps +inf absorbing") {
    const ExtReal inf = ExtReal::infinity();
    CHECK((inf + 3.0).is_infinite());
    CHECK((inf - 1e300).is_infinite());
    CHECK(inf >= ExtReal(1e308));
    CHECK((ExtReal(2.0) + 3.0) == ExtReal(5.0));
    CHECK((2.0 * inf).is_infinite());
    CHECK(min(inf, ExtReal(1.0)) == ExtReal(1.0));
    CHECK(ExtReal(std::numeric_limits<double>::infinity()).is_infinite());
    CHECK(inf.to_string() == "inf");
    CHECK(ExtReal(0.125).to_string() == "0.125");
}

TEST_CASE("ExtReal rejects NaN, -inf and 0 * inf") {
    CHECK_THROWS_AS(ExtReal(std::numeric_limits<double>::quiet_NaN()), std::domain_error);
    CHECK_THROWS_AS(ExtReal(-std::numeric_limits<double>::infinity()), std::domain_error);
    CHECK_THROWS_AS(0.0 * ExtReal::infinity(), std::domain_error);
    CHECK_THROWS_AS(-1.0 * ExtReal::infinity(), std::domain_error);
    CHECK_THROWS_AS(ExtReal::infinity().value(), std::domain_error);
    CHECK(0.0 * ExtReal(0.0) == ExtReal(0.0));
}

TEST_CASE("duality") {
    CHECK(duality(vec({1, 0}), vec({0, 1})) == 0.0);
    CHECK(duality(vec({1, 2}), vec({3, 4})) == 11.0);
    CHECK(duality(vec({0, 0}), vec({5, -7})) == 0.0);
    CHECK_THROWS_AS(duality(vec({1, 2}), vec({1, 2, 3})), std::invalid_argument);
}

TEST_CASE("indicator of the closed unit ball") {
    const auto unit = [](const Vec& p) { return in_ball(p, 1.0); };
    CHECK(indicator(unit, vec({0, 0})) == ExtReal(0.0));
    CHECK(indicator(unit, vec({2, 0})).is_infinite());
    CHECK(indicator(unit, vec({1, 0})) == ExtReal(0.0));
}

TEST_CASE("positive_part") {
    CHECK(positive_part(-1.5) == 0.0);
    CHECK(positive_part(0.0) == 0.0);
    CHECK(positive_part(2.25) == 2.25);
}

TEST_CASE("positively_colinear") {
    CHECK(positively_colinear(vec({2, 0}), vec({1, 0})));
    CHECK(positively_colinear(vec({0, 0}), vec({1, 3})));
    CHECK(positively_colinear(vec({1, 3}), vec({0, 0})));
    CHECK_FALSE(positively_colinear(vec({-1, 0}), vec({1, 0})));
    CHECK_FALSE(positively_colinear(vec({0, 1}), vec({1, 0})));
}

TEST_CASE("check_subgradient on the norm at the origin") {
    const ConvexFn f = scaled_norm(1.0, 2);
    std::vector<Vec> circle;
    for (int k = 0; k < 32; ++k) {
        const double t = 2.0 * 3.141592653589793 * k / 32;
        circle.push_back(vec({std::cos(t), std::sin(t)}));
    }
    CHECK(check_subgradient(f, vec({0, 0}), vec({0.5, 0}), circle));

    const std::vector<Vec> one{vec({1, 0})};
    const Verdict v = check_subgradient(f, vec({0, 0}), vec({2, 0}), one);
    CHECK_FALSE(v);
    REQUIRE(v.witness);
    CHECK(v.witness->isApprox(vec({1, 0})));
    CHECK(v.worst_residual == doctest::Approx(1.0));
}

TEST_CASE("check_subgradient is trivial at the probe x itself") {
    const ConvexFn f = shifted_quadratic(3.0, vec({1, -2}));
    const std::vector<Vec> self{vec({0.3, 0.4})};
    CHECK(check_subgradient(f, vec({0.3, 0.4}), vec({100, -50}), self));
}

TEST_CASE("check_subgradient rejects bad input") {
    const ConvexFn ball = ball_indicator(1.0, 2);
    const std::vector<Vec> probes{vec({0, 0})};
    CHECK_THROWS_AS(check_subgradient(ball, vec({2, 0}), vec({0, 0}), probes), std::invalid_argument);
    CHECK_THROWS_AS(check_subgradient(ball, vec({0, 0}), vec({0, 0}), std::vector<Vec>{}), std::invalid_argument);
}

TEST_CASE("check_segment_convexity") {
    const ConvexFn sq = ConvexFn::from_eval([](const Vec& z) { return ExtReal(z.squaredNorm()); }, 2, "sq");
    const ConvexFn neg = ConvexFn::from_eval([](const Vec& z) { return ExtReal(-z.squaredNorm()); }, 2, "neg");
    CHECK(check_segment_convexity(sq, vec({-1, 0}), vec({1, 0}), 1));
    const Verdict bad = check_segment_convexity(neg, vec({-1, 0}), vec({1, 0}), 1);
    CHECK_FALSE(bad);
    REQUIRE(bad.witness_t);
    CHECK(*bad.witness_t == doctest::Approx(0.5));
    CHECK(check_segment_convexity(neg, vec({0.7, 0.1}), vec({0.7, 0.1}), 5));
}

TEST_CASE("check_segment_convexity is vacuous with an infinite endpoint") {
    const ConvexFn ball = ball_indicator(1.0, 2);
    CHECK(check_segment_convexity(ball, vec({0, 0}), vec({5, 0}), 3));
}

TEST_CASE("ConvexFn factories") {
    const Vec a = vec({0.5, 0});
    CHECK(shifted_quadratic(1.0, a)(vec({1, 0})).value() == doctest::Approx(1.0));
    CHECK(shifted_quadratic_conjugate(1.0, a)(vec({1, 0})).value() == doctest::Approx(0.125));
    CHECK(scaled_norm(2.0, 2)(vec({3, 4})).value() == doctest::Approx(10.0));
    CHECK(ball_indicator(1.0, 2)(vec({0.6, 0.8})) == ExtReal(0.0));
    CHECK(ball_indicator(1.0, 2)(vec({0.6, 0.81})).is_infinite());
    CHECK_FALSE(ball_indicator(1.0, 2).in_domain(vec({1.1, 0})));
    CHECK_THROWS_AS(scaled_norm(1.0, 2)(vec({1, 2, 3})), std::invalid_argument);
}

// Fenchel-Young: φ(x) + φ*(y) ≥ ⟨x,y⟩ for the quadratic pair.
TEST_CASE("Fenchel-Young inequality on random pairs") {
    const Vec a = vec({0.3, -0.7});
    const ConvexFn phi = shifted_quadratic(2.0, a);
    const ConvexFn phi_star = shifted_quadratic_conjugate(2.0, a);
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 2000; ++i) {
        const Vec x = vec({u(rng), u(rng)});
        const Vec y = vec({u(rng), u(rng)});
        CHECK(phi(x).value() + phi_star(y).value() - duality(x, y) >= -1e-12);
    }
    // Equality on y = ∇φ(x) = λx + a.
    const Vec x = vec({0.4, 1.1});
    const Vec y = 2.0 * x + a;
    CHECK(phi(x).value() + phi_star(y).value() == doctest::Approx(duality(x, y)).epsilon(1e-14));
}
