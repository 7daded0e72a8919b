#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bipot/bipotential.hpp"
#include "bipot/cover.hpp"
#include "bipot/laws.hpp"
#include "bipot/sampling.hpp"

namespace bipot {

enum class LawKind { elastic, plastic, coulomb, friction };

const char* to_string(LawKind k);
/// Throws std::invalid_argument on an unknown name.
LawKind parse_law_kind(const std::string& name);

struct FenchelPair {
    ConvexFn phi;
    ConvexFn phi_star;
    std::string label;
};

/// Everything the verification drivers need to know about one law: the
/// closed form, its graph, a cover, samplers for the interesting regimes and
/// the 2-D slice used for lattice pictures.
struct LawModel {
    LawKind kind = LawKind::elastic;
    Eigen::Index dim = 2;
    double box = 2.0;  // default sampling half-width

    Bipotential closed_form;
    LawGraph graph;
    ConvexCover cover;       // grid plus exact candidates
    ConvexCover grid_cover;  // grid only
    /// Rigorous bound on grid_cover's envelope minus the exact infimum.
    std::function<double(const Vec&, const Vec&)> envelope_error_bound;

    std::function<std::string(const Vec&, const Vec&)> regime;

    std::function<PointPair(Rng&)> random_pair;
    std::function<PointPair(Rng&)> on_graph_pair;
    std::function<PointPair(Rng&)> boundary_pair;
    std::function<ImplicitConvexityCase(Rng&, FrozenSide)> implicit_case;

    /// (s, t) ↦ (x, y) on the plane used for graph pictures.
    std::function<PointPair(double, double)> embed;

    std::vector<FenchelPair> fenchel_pairs;  // empty for the friction laws

    /// Finite-gap pair with gap > margin drawn from random_pair.
    std::optional<PointPair> off_graph_pair(Rng& rng, double margin = 1e-3, int max_tries = 10000) const;
};

LawModel make_elastic_model(const ElasticParams& p, double box = 2.0, int angles = 64, int radii = 128);
LawModel make_plastic_model(const PlasticParams& p, double box = 2.0, int points = 1001);
LawModel make_coulomb_model(double mu, double box = 2.0);
LawModel make_friction_model(const FrictionParams& p, double box = 2.0, int points = 1001);

/// Mixture sampler for contact pairs: half uniform in [−h, h]³ × [−h, h]³,
/// half biased towards x_n ≤ 0 and reactions near K_{mu_hi}.
PointPair contact_pair(Rng& rng, double half_width, double mu_hi);

}  // namespace bipot
