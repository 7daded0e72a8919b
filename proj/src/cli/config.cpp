#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bipot/cli.hpp"

namespace bipot::cli {

using nlohmann::json;

Suite parse_suite(const std::string& s) {
    if (s == "axioms") return Suite::axioms;
    if (s == "cover") return Suite::cover;
    if (s == "oracle") return Suite::oracle;
    if (s == "all") return Suite::all;
    throw std::invalid_argument("unknown suite '" + s + "' (expected axioms, cover, oracle or all)");
}

const char* to_string(Suite s) {
    switch (s) {
        case Suite::axioms: return "axioms";
        case Suite::cover: return "cover";
        case Suite::oracle: return "oracle";
        case Suite::all: return "all";
    }
    return "unknown";
}

void LawConfig::validate() const {
    switch (law) {
        case LawKind::elastic:
            elastic.validate();
            if (elastic.n != 2) throw std::invalid_argument("elastic: only n = 2 is supported by the tools");
            break;
        case LawKind::plastic:
            plastic.validate();
            if (plastic.n != 2) throw std::invalid_argument("plastic: only n = 2 is supported by the tools");
            break;
        case LawKind::coulomb:
            if (!(mu > 0.0)) throw std::invalid_argument("coulomb: mu must be > 0");
            break;
        case LawKind::friction: friction.validate(); break;
    }
    if (!(box > 0.0)) throw std::invalid_argument("box must be > 0");
    if (graph_points < 2) throw std::invalid_argument("points must be >= 2");
    if (lambda_points < 2) throw std::invalid_argument("lambda_points must be >= 2");
    if (polar_angles < 1 || polar_radii < 1) throw std::invalid_argument("polar grid sizes must be >= 1");
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    if (oracle_probes < 1) throw std::invalid_argument("oracle_probes must be >= 1");
    if (!(tol > 0.0)) throw std::invalid_argument("tol must be > 0");
}

LawModel LawConfig::model() const {
    validate();
    switch (law) {
        case LawKind::elastic: return make_elastic_model(elastic, box, polar_angles, polar_radii);
        case LawKind::plastic: return make_plastic_model(plastic, box, lambda_points);
        case LawKind::coulomb: return make_coulomb_model(mu, box);
        case LawKind::friction: return make_friction_model(friction, box, lambda_points);
    }
    throw std::logic_error("unreachable");
}

namespace {

template <typename T>
void read_key(const json& j, const char* key, T& out) {
    if (!j.contains(key)) return;
    try {
        out = j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config key '") + key + "': " + e.what());
    }
}

}  // namespace

LawConfig LawConfig::from_json(const json& j, LawConfig c) {
    if (!j.is_object()) throw std::invalid_argument("config must be a JSON object");
    if (j.contains("law")) c.law = parse_law_kind(j.at("law").get<std::string>());
    // lambda/epsilon apply to whichever of elastic/plastic is selected.
    read_key(j, "lambda", c.elastic.lambda);
    read_key(j, "lambda", c.plastic.lambda);
    read_key(j, "epsilon", c.elastic.epsilon);
    read_key(j, "epsilon", c.plastic.epsilon);
    read_key(j, "mu", c.mu);
    read_key(j, "mu_minus", c.friction.mu_minus);
    read_key(j, "mu_plus", c.friction.mu_plus);
    read_key(j, "box", c.box);
    read_key(j, "points", c.graph_points);
    read_key(j, "lambda_points", c.lambda_points);
    read_key(j, "polar_angles", c.polar_angles);
    read_key(j, "polar_radii", c.polar_radii);
    read_key(j, "samples", c.samples);
    read_key(j, "oracle_probes", c.oracle_probes);
    read_key(j, "tol", c.tol);
    read_key(j, "seed", c.seed);
    return c;
}

json LawConfig::params_json() const {
    switch (law) {
        case LawKind::elastic: return {{"lambda", elastic.lambda}, {"epsilon", elastic.epsilon}};
        case LawKind::plastic:
            return {{"lambda", plastic.lambda},
                    {"epsilon", plastic.epsilon},
                    {"lambda_minus", plastic.lambda_minus()},
                    {"lambda_plus", plastic.lambda_plus()}};
        case LawKind::coulomb: return {{"mu", mu}};
        case LawKind::friction: return {{"mu_minus", friction.mu_minus}, {"mu_plus", friction.mu_plus}};
    }
    return json::object();
}

Vec parse_vec(const std::string& text) {
    std::vector<double> vals;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
        const auto first = item.find_first_not_of(" \t");
        const auto last = item.find_last_not_of(" \t");
        if (first == std::string::npos) throw std::invalid_argument("empty component in vector '" + text + "'");
        const std::string tok = item.substr(first, last - first + 1);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || !std::isfinite(v)) {
            throw std::invalid_argument("malformed number '" + tok + "' in vector '" + text + "'");
        }
        vals.push_back(v);
    }
    if (vals.empty()) throw std::invalid_argument("empty vector");
    return Eigen::Map<const Vec>(vals.data(), static_cast<Eigen::Index>(vals.size()));
}

json ext_json(ExtReal v) {
    if (v.is_infinite()) return "inf";
    return v.value();
}

json real_json(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

}  // namespace bipot::cli
