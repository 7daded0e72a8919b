#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bipot/law_model.hpp"

namespace bipot::cli {

enum class Suite { axioms, cover, oracle, all };

Suite parse_suite(const std::string& s);
const char* to_string(Suite s);

/// One law per invocation plus everything the drivers need. Defaults give
/// reproducible runs; a fixed seed yields byte-identical output.
struct LawConfig {
    LawKind law = LawKind::elastic;
    ElasticParams elastic{};
    PlasticParams plastic{};
    double mu = 0.3;  // single-coefficient Coulomb law
    FrictionParams friction{};

    double box = 2.0;          // sampling half-width
    int graph_points = 201;    // lattice points per axis for `graph`
    int lambda_points = 1001;  // interval covers
    int polar_angles = 64;
    int polar_radii = 128;
    int samples = 1000;        // random pairs per verification check
    int oracle_probes = 20;
    double tol = kDefaultTol;
    std::uint64_t seed = 42;

    /// Throws std::invalid_argument on any violated parameter invariant.
    void validate() const;
    LawModel model() const;

    /// Overlays the keys present in `j` on top of `base`.
    static LawConfig from_json(const nlohmann::json& j, LawConfig base);
    nlohmann::json params_json() const;
};

/// Parses "a,b,c" into a vector. Throws std::invalid_argument when malformed.
Vec parse_vec(const std::string& text);

/// JSON number, or the string "inf".
nlohmann::json ext_json(ExtReal v);
nlohmann::json real_json(double v);

nlohmann::json cmd_eval(const LawConfig& cfg, const Vec& x, const Vec& y);
/// Writes the `x,y,member,gap` lattice CSV of the law's 2-D slice.
void cmd_graph(const LawConfig& cfg, std::ostream& csv);
/// Report with top-level keys {law, suite, checks, seed, passed}.
nlohmann::json cmd_verify(const LawConfig& cfg, Suite suite);

/// Entry point. Exit codes: 0 success or all checks passed, 1 a verification
/// failed, 2 usage or configuration error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipot::cli
