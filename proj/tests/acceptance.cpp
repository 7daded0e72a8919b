// Acceptance gate: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bipot/cli.hpp"
#include "bipot/law_model.hpp"
#include "bipot/oracles.hpp"

using namespace bipot;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double time_limit;  // seconds; 0 means none
    std::function<Outcome()> body;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Rng seeded(std::uint64_t tag) { return Rng(0x5eed0000ULL + tag); }

// ---------------------------------------------------------------------------

Outcome elastic_envelope() {
    const ElasticParams p{1.0, 0.25, 2};
    const ConvexCover grid = elastic_cover(p, 64, 128, false);
    Rng rng = seeded(1);
    double worst_grid = 0.0;
    double worst_refined = 0.0;
    for (int i = 0; i < 10000; ++i) {
        const Vec x = uniform_box(rng, 2, 2.0);
        const Vec y = uniform_box(rng, 2, 2.0);
        const double exact = elastic_b(p, x, y);
        worst_grid = std::max(worst_grid, std::abs(envelope_at(grid, x, y).value.value() - exact));
        const Vec r = y - p.lambda * x;
        const Vec a = r.norm() > p.epsilon ? elastic_stationarity(p, x, y).a : r;
        worst_refined = std::max(worst_refined, std::abs(elastic_cover_b(p, a, x, y) - exact));
    }
    return {worst_grid <= 5e-3 && worst_refined <= 1e-10,
            "grid max err " + fmt("%.3e", worst_grid) + " (<= 5e-3), refined max err " + fmt("%.3e", worst_refined) +
                " (<= 1e-10)"};
}

// x is drawn from the unit disk: the η-grid error is h‖x‖ with h = 5e-4.
Outcome plastic_envelope() {
    const PlasticParams p{1.0, 0.25, 2};
    const ConvexCover grid = plastic_cover(p, 1001, false);
    Rng rng = seeded(2);
    double worst = 0.0;
    int finite = 0;
    int class_mismatch = 0;
    for (int i = 0; i < 10000; ++i) {
        const Vec x = uniform_ball(rng, 2, 1.0);
        const Vec y = uniform_box(rng, 2, 2.0);
        const ExtReal exact = plastic_b(p, x, y);
        const ExtReal env = envelope_at(grid, x, y).value;
        if (exact.is_infinite() || env.is_infinite()) {
            class_mismatch += exact.is_infinite() != env.is_infinite();
            continue;
        }
        ++finite;
        worst = std::max(worst, std::abs(env.value() - exact.value()));
    }
    return {worst <= 5e-4 && class_mismatch == 0,
            "max err " + fmt("%.3e", worst) + " on " + std::to_string(finite) + " finite pairs, " +
                std::to_string(class_mismatch) + " +inf mismatches"};
}

// x_t is drawn from the unit disk and y_n ≤ 2: the μ-grid error is h y_n ‖x_t‖ with h = 2e-4.
Outcome friction_envelope() {
    const FrictionParams p{0.2, 0.4};
    const ConvexCover grid = friction_cover(p, 1001, false);
    Rng rng = seeded(3);
    double worst = 0.0;
    int finite = 0;
    int class_mismatch = 0;
    for (int i = 0; i < 10000; ++i) {
        PointPair pr = contact_pair(rng, 2.0, p.mu_plus);
        const double xt = pr.x.tail<2>().norm();
        if (xt > 1.0) pr.x.tail<2>() /= xt;
        const ExtReal exact = friction_b(p, ContactVec::from_vec(pr.x), ContactVec::from_vec(pr.y));
        const ExtReal env = envelope_at(grid, pr.x, pr.y).value;
        if (exact.is_infinite() || env.is_infinite()) {
            class_mismatch += exact.is_infinite() != env.is_infinite();
            continue;
        }
        ++finite;
        worst = std::max(worst, std::abs(env.value() - exact.value()));
    }
    return {worst <= 5e-4 && class_mismatch == 0,
            "max err " + fmt("%.3e", worst) + " on " + std::to_string(finite) + " finite pairs, " +
                std::to_string(class_mismatch) + " +inf mismatches"};
}

Outcome inequality() {
    const auto elastic = make_elastic_model({1.0, 0.25, 2});
    const auto plastic = make_plastic_model({1.0, 0.25, 2});
    const auto friction = make_friction_model({0.2, 0.4});
    struct Target {
        std::string name;
        Bipotential b;
        const LawModel* model;
    };
    std::vector<Target> targets{
        {"elastic", elastic.closed_form, &elastic},
        {"plastic", plastic.closed_form, &plastic},
        {"friction", friction.closed_form, &friction},
        {"b_inf(elastic)", b_infinity(elastic.graph, 2, 2), &elastic},
        {"b_inf(plastic)", b_infinity(plastic.graph, 2, 2), &plastic},
        {"b_inf(friction)", b_infinity(friction.graph, 3, 3), &friction},
    };
    for (const auto* m : {&elastic, &plastic}) {
        for (const auto& fp : m->fenchel_pairs) targets.push_back({"separable " + fp.label, separable(fp.phi, fp.phi_star), m});
    }
    Outcome out;
    std::size_t violations = 0;
    double worst = 0.0;
    int tag = 40;
    for (const auto& t : targets) {
        Rng rng = seeded(static_cast<std::uint64_t>(tag++));
        for (int i = 0; i < 100000; ++i) {
            const PointPair pr = i % 4 == 3 ? t.model->on_graph_pair(rng) : t.model->random_pair(rng);
            const ExtReal g = gap(t.b, pr.x, pr.y);
            if (g.is_infinite()) continue;
            worst = std::max(worst, -g.value());
            if (g.value() < -1e-9) ++violations;
        }
    }
    out.passed = violations == 0;
    out.detail = std::to_string(targets.size()) + " bipotentials x 1e5 pairs, " + std::to_string(violations) +
                 " violations, most negative gap " + fmt("%.3e", -worst);
    return out;
}

Outcome criticality() {
    const std::vector<LawModel> models{make_elastic_model({1.0, 0.25, 2}), make_plastic_model({1.0, 0.25, 2}),
                                       make_coulomb_model(0.3), make_friction_model({0.2, 0.4})};
    std::string detail;
    bool ok = true;
    int tag = 50;
    for (const auto& m : models) {
        Rng rng = seeded(static_cast<std::uint64_t>(tag++));
        int bad = 0;
        for (int i = 0; i < 11000; ++i) {
            const PointPair pr = i < 10000 ? m.random_pair(rng) : m.boundary_pair(rng);
            if (is_critical(m.closed_form, pr.x, pr.y, 1e-9) != m.graph.contains(pr.x, pr.y, 1e-9)) ++bad;
        }
        ok = ok && bad == 0;
        detail += std::string(detail.empty() ? "" : ", ") + to_string(m.kind) + " " + std::to_string(bad);
    }
    return {ok, "disagreements on 1e4 random + 1e3 boundary pairs: " + detail};
}

Outcome conjugacy() {
    const GridSpec grid = GridSpec::cube(2, -3.0, 3.0, 301);
    const double lambda = 1.0;
    const Vec a = Vec{{0.5, 0.0}};
    Rng rng = seeded(6);

    std::vector<Vec> probes;
    for (int i = 0; i < 100; ++i) probes.push_back(uniform_box(rng, 2, 2.0));
    const ConjugateVerdict q =
        conjugate_pair_check(shifted_quadratic(lambda, a), shifted_quadratic_conjugate(lambda, a), grid, probes, 1e-3);

    std::vector<Vec> ball_probes;
    for (int i = 0; i < 50; ++i) ball_probes.push_back(uniform_ball(rng, 2, 0.95 * lambda));
    for (int i = 0; i < 50; ++i) ball_probes.push_back(uniform_sphere(rng, 2, uniform(rng, 1.05, 2.0) * lambda));
    const ConjugateVerdict n =
        conjugate_pair_check(scaled_norm(lambda, 2), ball_indicator(lambda, 2), grid, ball_probes, 1e-3);
    int divergent = 0;
    for (const auto& o : n.outcomes) divergent += o.expected_infinite && o.passed;

    return {q.passed && n.passed && divergent == 50,
            "quadratic max err " + fmt("%.3e", q.worst_error) + "; norm/ball interior max err " +
                fmt("%.3e", n.worst_error) + ", " + std::to_string(divergent) + "/50 exterior probes above 1e6"};
}

// The witness each cover must use, recomputed here from its definition.
Vec expected_witness(LawKind kind, const ImplicitConvexityCase& c) {
    const double al = c.alpha;
    const double be = 1.0 - al;
    switch (kind) {
        case LawKind::elastic: return al * c.lambda1 + be * c.lambda2;
        case LawKind::plastic:
            if (c.side == FrozenSide::freeze_y) return Vec::Constant(1, std::min(c.lambda1[0], c.lambda2[0]));
            return al * c.lambda1 + be * c.lambda2;
        default: {
            const double m1 = c.lambda1[0];
            const double m2 = c.lambda2[0];
            if (c.side == FrozenSide::freeze_y) return Vec::Constant(1, std::min(m1, m2));
            const double w1 = al * c.z1[0];
            const double w2 = be * c.z2[0];
            if (c.z1[0] < 0.0 || c.z2[0] < 0.0 || !(w1 + w2 > 0.0)) return Vec::Constant(1, std::min(m1, m2));
            return Vec::Constant(1, (w1 * m1 + w2 * m2) / (w1 + w2));
        }
    }
}

Outcome implicit_convexity() {
    const std::vector<LawModel> models{make_elastic_model({1.0, 0.25, 2}), make_plastic_model({1.0, 0.25, 2}),
                                       make_friction_model({0.2, 0.4})};
    bool ok = true;
    std::string detail;
    int tag = 70;
    for (const auto& m : models) {
        for (const auto side : {FrozenSide::freeze_x, FrozenSide::freeze_y}) {
            Rng rng = seeded(static_cast<std::uint64_t>(tag++));
            int bad = 0;
            int vacuous = 0;
            for (int i = 0; i < 1000; ++i) {
                const auto c = m.implicit_case(rng, side);
                try {
                    const auto v = check_implicit_convexity(m.cover, c, 1e-9);
                    vacuous += v.vacuous;
                    const Vec w = expected_witness(m.kind, c);
                    if (!v || (v.lambda - w).norm() > 1e-15 * std::max(1.0, w.norm())) ++bad;
                } catch (const std::domain_error&) {
                    ++bad;
                }
            }
            ok = ok && bad == 0;
            detail += std::string(detail.empty() ? "" : ", ") + to_string(m.kind) +
                      (side == FrozenSide::freeze_x ? "/x " : "/y ") + std::to_string(bad) + " (" +
                      std::to_string(vacuous) + " vacuous)";
        }
    }
    return {ok, "failures per law/frozen side: " + detail};
}

Outcome subnormality() {
    const std::vector<LawModel> models{make_elastic_model({1.0, 0.25, 2}), make_plastic_model({1.0, 0.25, 2}),
                                       make_coulomb_model(0.3), make_friction_model({0.2, 0.4})};
    bool ok = true;
    std::string detail;
    int tag = 80;
    for (const auto& m : models) {
        Rng rng = seeded(static_cast<std::uint64_t>(tag++));
        int on_bad = 0;
        int off_bad = 0;
        for (int i = 0; i < 100; ++i) {
            const PointPair pr = m.on_graph_pair(rng);
            const auto probes = ring_probes(pr.x);
            if (probes.size() != 100 || !check_subgradient(m.closed_form.partial_x(pr.y), pr.x, pr.y, probes, 1e-9))
                ++on_bad;
        }
        for (int i = 0; i < 100; ++i) {
            const auto pr = m.off_graph_pair(rng);
            if (!pr) {
                ++off_bad;
                continue;
            }
            const auto probes = ring_probes(pr->x);
            if (probes.size() != 100 || check_subgradient(m.closed_form.partial_x(pr->y), pr->x, pr->y, probes, 1e-9))
                ++off_bad;
        }
        ok = ok && on_bad == 0 && off_bad == 0;
        detail += std::string(detail.empty() ? "" : ", ") + to_string(m.kind) + " " + std::to_string(on_bad) + "/" +
                  std::to_string(off_bad);
    }
    return {ok, "false rejections/acceptances on 1e2 on- and 1e2 off-graph points: " + detail};
}

bool same(ExtReal a, ExtReal b, double tol, double& worst) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    const double d = std::abs(a.value() - b.value());
    worst = std::max(worst, d);
    return d <= tol;
}

Outcome degeneration() {
    Rng rng = seeded(9);
    const ElasticParams ep{1.0, 0.0, 2};
    const PlasticParams pp{1.0, 0.0, 2};
    const FrictionParams fp{0.3, 0.3};
    const Bipotential ideal_elastic = separable(shifted_quadratic(1.0, Vec::Zero(2)), shifted_quadratic_conjugate(1.0, Vec::Zero(2)));
    const Bipotential ideal_plastic = separable(scaled_norm(1.0, 2), ball_indicator(1.0, 2));
    int bad = 0;
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec x = uniform_box(rng, 2, 2.0);
        const Vec y = uniform_box(rng, 2, 2.0);
        bad += !same(ExtReal(elastic_b(ep, x, y)), ideal_elastic(x, y), 1e-12, worst);
        bad += !same(plastic_b(pp, x, y), ideal_plastic(x, y), 1e-12, worst);
        const PointPair c = contact_pair(rng, 2.0, 0.3);
        const auto cx = ContactVec::from_vec(c.x);
        const auto cy = ContactVec::from_vec(c.y);
        bad += !same(friction_b(fp, cx, cy), coulomb_b(0.3, cx, cy), 1e-12, worst);
    }
    return {bad == 0, std::to_string(bad) + " mismatches over 3 x 1e3 samples, max diff " + fmt("%.3e", worst)};
}

Outcome cli_determinism() {
    bool ok = true;
    std::string detail;
    for (const char* law : {"elastic", "plastic", "coulomb", "friction"}) {
        std::ostringstream a, b, err;
        const std::vector<std::string> args{"verify", "--law", law, "--suite", "all", "--seed", "42"};
        const int ra = cli::run(args, a, err);
        const int rb = cli::run(args, b, err);
        const bool same_bytes = a.str() == b.str() && !a.str().empty();
        ok = ok && same_bytes && ra == rb;
        detail += std::string(law) + (same_bytes ? " identical" : " DIFFERENT") + " (exit " + std::to_string(ra) + "), ";
    }

    std::ostringstream csv, err;
    const int rc = cli::run({"graph", "--law", "plastic"}, csv, err);
    const PlasticParams p{};
    std::istringstream in(csv.str());
    std::string line;
    std::getline(in, line);
    bool header_ok = line == "x,y,member,gap";
    std::size_t rows = 0;
    std::size_t mismatches = 0;
    std::size_t members = 0;
    while (std::getline(in, line)) {
        ++rows;
        std::istringstream fields(line);
        std::string s, t, m;
        std::getline(fields, s, ',');
        std::getline(fields, t, ',');
        std::getline(fields, m, ',');
        const Vec x{{std::stod(s), 0.0}};
        const Vec y{{std::stod(t), 0.0}};
        const bool expected = plastic_member(p, x, y);
        members += expected;
        if ((m == "1") != expected) ++mismatches;
    }
    ok = ok && rc == 0 && header_ok && rows == 201u * 201u && mismatches == 0;
    detail += "plastic graph " + std::to_string(rows) + " rows, " + std::to_string(members) + " members, " +
              std::to_string(mismatches) + " mismatches vs plastic_member";
    return {ok, detail};
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "elastic cover infimum vs closed form", 60, elastic_envelope},
        {2, "plastic cover infimum vs closed form", 30, plastic_envelope},
        {3, "friction cover infimum vs closed form", 30, friction_envelope},
        {4, "bipotential inequality", 0, inequality},
        {5, "criticality iff membership", 0, criticality},
        {6, "conjugacy oracle", 120, conjugacy},
        {7, "implicit convexity witnesses", 0, implicit_convexity},
        {8, "subnormality spot check", 0, subnormality},
        {9, "degeneration limits", 0, degeneration},
        {10, "CLI determinism and plastic graph", 0, cli_determinism},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::string timing = fmt("%.2fs", secs);
        if (c.time_limit > 0) {
            timing += " (limit " + fmt("%.0fs", c.time_limit) + ")";
            if (secs > c.time_limit) o.passed = false;
        }
        failed += !o.passed;
        std::cout << "criterion " << c.id << ": " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << " -- "
                  << o.detail << " [" << timing << "]" << std::endl;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << std::endl;
    return failed == 0 ? 0 : 1;
}
