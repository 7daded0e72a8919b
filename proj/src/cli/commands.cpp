#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <set>
#include <stdexcept>

#include "bipot/cli.hpp"
#include "bipot/oracles.hpp"

namespace bipot::cli {

using nlohmann::json;

namespace {

json vec_json(const Vec& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

std::string csv_number(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

// Independent stream per check so that suites can be run in any combination.
Rng check_rng(std::uint64_t seed, std::uint64_t tag) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(tag)};
    return Rng(seq);
}

json make_check(const std::string& name, bool passed, std::size_t count, std::size_t failures, double worst) {
    return {{"name", name},
            {"passed", passed},
            {"count", count},
            {"failures", failures},
            {"worst_residual", real_json(worst)}};
}

void axioms_suite(const LawConfig& cfg, const LawModel& m, json& checks) {
    const auto n = static_cast<std::size_t>(cfg.samples);

    {
        Rng rng = check_rng(cfg.seed, 1);
        std::size_t bad = 0;
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = m.random_pair(rng);
            const ExtReal g = gap(m.closed_form, p.x, p.y);
            if (g.is_infinite()) continue;
            worst = std::max(worst, -g.value());
            if (g.value() < -cfg.tol) ++bad;
        }
        checks.push_back(make_check("bipotential_inequality", bad == 0, n, bad, worst));
    }

    {
        Rng rng = check_rng(cfg.seed, 2);
        std::vector<PointPair> pairs;
        for (std::size_t i = 0; i < n; ++i) pairs.push_back(i % 2 ? m.on_graph_pair(rng) : m.random_pair(rng));
        const AxiomReport r = verify_axioms(m.closed_form, pairs, standard_probes(), cfg.tol);
        json c = make_check("axioms_sampled", r.passed(), r.samples_used,
                            r.inequality_violations.size() + r.convexity_failures.size() +
                                r.equivalence_failures.size(),
                            -r.worst_gap_violation);
        c["critical_pairs"] = r.critical_pairs;
        c["segment_checks"] = r.segment_checks;
        c["inequality_violations"] = r.inequality_violations.size();
        c["convexity_failures"] = r.convexity_failures.size();
        c["equivalence_failures"] = r.equivalence_failures.size();
        checks.push_back(std::move(c));
    }

    {
        Rng rng = check_rng(cfg.seed, 3);
        std::size_t bad = 0;
        const std::size_t boundary = std::max<std::size_t>(1, n / 10);
        for (std::size_t i = 0; i < n + boundary; ++i) {
            const auto p = i < n ? m.random_pair(rng) : m.boundary_pair(rng);
            if (is_critical(m.closed_form, p.x, p.y, cfg.tol) != m.graph.contains(p.x, p.y, cfg.tol)) ++bad;
        }
        json c = make_check("critical_iff_member", bad == 0, n + boundary, bad, 0.0);
        c["boundary_samples"] = boundary;
        checks.push_back(std::move(c));
    }

    {
        Rng rng = check_rng(cfg.seed, 4);
        const Bipotential binf = b_infinity(m.graph, m.dim, m.dim);
        std::size_t bad = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = i % 2 ? m.on_graph_pair(rng) : m.random_pair(rng);
            const ExtReal g = gap(binf, p.x, p.y);
            const bool ok = (g.is_finite() && g.value() >= -cfg.tol) || g.is_infinite();
            if (!ok || is_critical(binf, p.x, p.y, cfg.tol) != m.graph.contains(p.x, p.y)) ++bad;
        }
        checks.push_back(make_check("b_infinity_exact", bad == 0, n, bad, 0.0));
    }

    {
        Rng rng = check_rng(cfg.seed, 5);
        const std::size_t k = std::min<std::size_t>(n, 100);
        std::size_t on_fail = 0;
        std::size_t off_fail = 0;
        std::size_t off_found = 0;
        double worst = -HUGE_VAL;
        for (std::size_t i = 0; i < k; ++i) {
            const auto p = m.on_graph_pair(rng);
            const auto probes = ring_probes(p.x);
            const Verdict v = check_subgradient(m.closed_form.partial_x(p.y), p.x, p.y, probes, cfg.tol);
            worst = std::max(worst, v.worst_residual);
            if (!v) ++on_fail;
        }
        for (std::size_t i = 0; i < k; ++i) {
            const auto p = m.off_graph_pair(rng);
            if (!p) {
                ++off_fail;
                continue;
            }
            ++off_found;
            const auto probes = ring_probes(p->x);
            const Verdict v = check_subgradient(m.closed_form.partial_x(p->y), p->x, p->y, probes, cfg.tol);
            if (v) ++off_fail;
        }
        json c = make_check("subnormality_spot_check", on_fail + off_fail == 0, 2 * k, on_fail + off_fail, worst);
        c["on_graph_rejected"] = on_fail;
        c["off_graph_accepted"] = off_fail;
        c["off_graph_points"] = off_found;
        checks.push_back(std::move(c));
    }
}

void cover_suite(const LawConfig& cfg, const LawModel& m, json& checks) {
    const auto n = static_cast<std::size_t>(cfg.samples);

    for (const auto side : {FrozenSide::freeze_x, FrozenSide::freeze_y}) {
        Rng rng = check_rng(cfg.seed, side == FrozenSide::freeze_x ? 11 : 12);
        std::size_t bad = 0;
        std::size_t vacuous = 0;
        double worst = -HUGE_VAL;
        for (std::size_t i = 0; i < n; ++i) {
            const auto c = m.implicit_case(rng, side);
            try {
                const auto v = check_implicit_convexity(m.cover, c, cfg.tol);
                if (v.vacuous) {
                    ++vacuous;
                } else {
                    worst = std::max(worst, v.residual);
                }
                if (!v) ++bad;
            } catch (const std::domain_error&) {
                ++bad;
            }
        }
        json c = make_check(side == FrozenSide::freeze_x ? "implicit_convexity_freeze_x" : "implicit_convexity_freeze_y",
                            bad == 0, n, bad, worst);
        c["vacuous"] = vacuous;
        checks.push_back(std::move(c));
    }

    {
        Rng rng = check_rng(cfg.seed, 13);
        std::vector<PointPair> pairs;
        for (std::size_t i = 0; i < n; ++i) {
            switch (i % 3) {
                case 0: pairs.push_back(m.on_graph_pair(rng)); break;
                case 1: pairs.push_back(m.random_pair(rng)); break;
                default: pairs.push_back(m.boundary_pair(rng)); break;
            }
        }
        const CoverVerdict v = cover_covers(m.cover, m.graph, pairs, cfg.tol);
        json c = make_check("cover_covers", v.passed, n, v.uncovered_members.size() + v.spurious_critical.size(), 0.0);
        c["members"] = v.members;
        c["members_covered"] = v.members_covered;
        c["non_members"] = v.non_members;
        c["non_members_clear"] = v.non_members_clear;
        checks.push_back(std::move(c));
    }

    {
        Rng rng = check_rng(cfg.seed, 14);
        const Bipotential grid_env = inf_envelope(m.grid_cover);
        const Bipotential refined = inf_envelope(m.cover);
        std::size_t grid_bad = 0;
        std::size_t refined_bad = 0;
        std::size_t finite = 0;
        double worst_excess = -HUGE_VAL;
        double worst_refined = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const auto p = i % 2 ? m.on_graph_pair(rng) : m.random_pair(rng);
            const ExtReal exact = m.closed_form(p.x, p.y);
            const ExtReal g = grid_env(p.x, p.y);
            const ExtReal r = refined(p.x, p.y);
            if (exact.is_infinite() || g.is_infinite()) {
                if (exact.is_infinite() != g.is_infinite()) ++grid_bad;
                if (exact.is_infinite() != r.is_infinite()) ++refined_bad;
                continue;
            }
            ++finite;
            const double diff = g.value() - exact.value();
            const double bound = m.envelope_error_bound(p.x, p.y);
            worst_excess = std::max(worst_excess, diff - bound);
            if (diff > bound + 1e-12 || diff < -cfg.tol * std::max(1.0, std::abs(exact.value()))) ++grid_bad;
            if (r.is_infinite()) {
                ++refined_bad;
                continue;
            }
            const double rd = std::abs(r.value() - exact.value());
            worst_refined = std::max(worst_refined, rd);
            if (rd > cfg.tol * std::max(1.0, std::abs(exact.value()))) ++refined_bad;
        }
        json c = make_check("envelope_grid_vs_closed_form", grid_bad == 0, n, grid_bad, worst_excess);
        c["finite"] = finite;
        checks.push_back(std::move(c));
        checks.push_back(make_check("envelope_refined_vs_closed_form", refined_bad == 0, n, refined_bad, worst_refined));
    }
}

// Plastic probes straddle the yield sphere so both conjugate branches are hit.
std::vector<Vec> conjugate_probes(const LawConfig& cfg, const LawModel& m, Rng& rng, int count) {
    std::vector<Vec> probes;
    if (m.kind == LawKind::plastic) {
        const double lam = cfg.plastic.lambda;
        for (int i = 0; i < count; ++i) {
            probes.push_back(i % 2 ? uniform_ball(rng, m.dim, 0.95 * lam)
                                   : uniform_sphere(rng, m.dim, uniform(rng, 1.05 * lam, 2.0 * lam)));
        }
    } else {
        for (int i = 0; i < count; ++i) probes.push_back(uniform_box(rng, m.dim, 2.0));
    }
    return probes;
}

void oracle_suite(const LawConfig& cfg, const LawModel& m, json& checks) {
    {
        Rng rng = check_rng(cfg.seed, 21);
        for (const auto& pair : m.fenchel_pairs) {
            const auto probes = conjugate_probes(cfg, m, rng, cfg.oracle_probes);
            const GridSpec grid = GridSpec::cube(m.dim, -3.0, 3.0, 301);
            const ConjugateVerdict v = conjugate_pair_check(pair.phi, pair.phi_star, grid, probes, 1e-3);
            std::size_t bad = 0;
            std::size_t infinite = 0;
            for (const auto& o : v.outcomes) {
                bad += o.passed ? 0 : 1;
                infinite += o.expected_infinite ? 1 : 0;
            }
            json c = make_check("conjugate_pair", v.passed, probes.size(), bad, v.worst_error);
            c["pair"] = pair.label;
            c["divergent_probes"] = infinite;
            checks.push_back(std::move(c));
        }
    }

    const GridSpec lattice = GridSpec::cube(2, -cfg.box, cfg.box, cfg.graph_points);
    const PairEmbedding embed = [&m](const Vec& st) { return m.embed(st[0], st[1]); };
    std::set<std::size_t> members;
    for (std::size_t k = 0; k < lattice.point_count(); ++k) {
        const Vec st = lattice.point(k);
        const auto p = m.embed(st[0], st[1]);
        if (m.graph.contains(p.x, p.y, cfg.tol)) members.insert(k);
    }
    auto mismatches = [&](const std::vector<PointPair>& scanned) {
        std::size_t matched = 0;
        for (const auto& p : scanned) {
            if (m.graph.contains(p.x, p.y, cfg.tol)) ++matched;
        }
        return (scanned.size() - matched) + (members.size() - matched);
    };
    {
        const auto scanned = lattice_critical_scan(m.closed_form, lattice, cfg.tol, embed);
        const std::size_t bad = mismatches(scanned);
        json c = make_check("lattice_scan_vs_member", bad == 0, lattice.point_count(), bad, 0.0);
        c["critical_points"] = scanned.size();
        c["member_points"] = members.size();
        checks.push_back(std::move(c));
    }
    {
        const auto scanned = lattice_critical_scan(b_infinity(m.graph, m.dim, m.dim), lattice, cfg.tol, embed);
        const std::size_t bad = mismatches(scanned);
        checks.push_back(make_check("lattice_scan_b_infinity", bad == 0, lattice.point_count(), bad, 0.0));
    }
}

}  // namespace

json cmd_eval(const LawConfig& cfg, const Vec& x, const Vec& y) {
    const LawModel m = cfg.model();
    if (x.size() != m.dim || y.size() != m.dim) {
        throw std::invalid_argument("law '" + std::string(to_string(cfg.law)) + "' expects vectors of dimension " +
                                    std::to_string(m.dim));
    }
    const ExtReal b = m.closed_form(x, y);
    const double d = duality(x, y);
    return {{"law", to_string(cfg.law)},
            {"params", cfg.params_json()},
            {"x", vec_json(x)},
            {"y", vec_json(y)},
            {"b", ext_json(b)},
            {"duality", d},
            {"gap", ext_json(b - d)},
            {"critical", is_critical(m.closed_form, x, y, cfg.tol)},
            {"regime", m.regime(x, y)}};
}

void cmd_graph(const LawConfig& cfg, std::ostream& csv) {
    const LawModel m = cfg.model();
    const GridSpec lattice = GridSpec::cube(2, -cfg.box, cfg.box, cfg.graph_points);
    csv << "x,y,member,gap\n";
    for (int j = 0; j < lattice.points_per_axis; ++j) {
        const double t = lattice.coordinate(1, j);
        for (int i = 0; i < lattice.points_per_axis; ++i) {
            const double s = lattice.coordinate(0, i);
            const auto p = m.embed(s, t);
            const ExtReal g = gap(m.closed_form, p.x, p.y);
            csv << csv_number(s) << ',' << csv_number(t) << ','
                << (is_critical(m.closed_form, p.x, p.y, cfg.tol) ? '1' : '0') << ',' << g.to_string() << '\n';
        }
    }
}

json cmd_verify(const LawConfig& cfg, Suite suite) {
    const LawModel m = cfg.model();
    json checks = json::array();
    if (suite == Suite::axioms || suite == Suite::all) axioms_suite(cfg, m, checks);
    if (suite == Suite::cover || suite == Suite::all) cover_suite(cfg, m, checks);
    if (suite == Suite::oracle || suite == Suite::all) oracle_suite(cfg, m, checks);
    bool passed = true;
    for (const auto& c : checks) passed = passed && c.at("passed").get<bool>();
    return {{"law", to_string(cfg.law)}, {"suite", to_string(suite)}, {"checks", checks}, {"seed", cfg.seed},
            {"passed", passed}};
}

}  // namespace bipot::cli
