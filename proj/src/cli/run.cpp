#include <fstream>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>

#include "bipot/cli.hpp"

namespace bipot::cli {

using nlohmann::json;

namespace {

struct Overrides {
    std::string config_path;
    std::optional<std::string> law;
    std::optional<double> lambda, epsilon, mu, mu_minus, mu_plus, box, tol;
    std::optional<int> points, samples;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* app, Overrides& o) {
    app->add_option("--law", o.law, "elastic, plastic, coulomb or friction");
    app->add_option("--config", o.config_path, "JSON config file; flags override its keys");
    app->add_option("--lambda", o.lambda, "stiffness (elastic) or yield threshold (plastic)");
    app->add_option("--epsilon", o.epsilon, "blur width");
    app->add_option("--mu", o.mu, "Coulomb coefficient");
    app->add_option("--mu-minus", o.mu_minus, "lower friction coefficient");
    app->add_option("--mu-plus", o.mu_plus, "upper friction coefficient");
    app->add_option("--box", o.box, "sampling half-width");
    app->add_option("--points", o.points, "lattice points per axis");
    app->add_option("--samples", o.samples, "random pairs per check");
    app->add_option("--seed", o.seed, "random seed");
    app->add_option("--tol", o.tol, "criticality tolerance");
}

LawConfig resolve(const Overrides& o) {
    LawConfig cfg;
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::invalid_argument("cannot read config '" + o.config_path + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& e) {
            throw std::invalid_argument("config '" + o.config_path + "': " + e.what());
        }
        cfg = LawConfig::from_json(j, cfg);
    }
    if (o.law) cfg.law = parse_law_kind(*o.law);
    if (o.lambda) cfg.elastic.lambda = cfg.plastic.lambda = *o.lambda;
    if (o.epsilon) cfg.elastic.epsilon = cfg.plastic.epsilon = *o.epsilon;
    if (o.mu) cfg.mu = *o.mu;
    if (o.mu_minus) cfg.friction.mu_minus = *o.mu_minus;
    if (o.mu_plus) cfg.friction.mu_plus = *o.mu_plus;
    if (o.box) cfg.box = *o.box;
    if (o.points) cfg.graph_points = *o.points;
    if (o.samples) cfg.samples = *o.samples;
    if (o.seed) cfg.seed = *o.seed;
    if (o.tol) cfg.tol = *o.tol;
    cfg.validate();
    return cfg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"bipotkit: evaluate, sample and verify bipotentials of thick-line laws"};
    app.require_subcommand(1);

    Overrides eval_o, graph_o, verify_o;
    std::string x_text, y_text, graph_out, verify_out;
    std::string suite_name = "all";

    auto* eval = app.add_subcommand("eval", "evaluate b(x,y), the gap and the regime");
    add_common(eval, eval_o);
    eval->add_option("--x", x_text, "comma-separated x")->required();
    eval->add_option("--y", y_text, "comma-separated y")->required();

    auto* graph = app.add_subcommand("graph", "write the x,y,member,gap lattice CSV");
    add_common(graph, graph_o);
    graph->add_option("--out", graph_out, "CSV path (default: stdout)");

    auto* verify = app.add_subcommand("verify", "run verification suites and print a JSON report");
    add_common(verify, verify_o);
    verify->add_option("--suite", suite_name, "axioms, cover, oracle or all");
    verify->add_option("--out", verify_out, "report path (default: stdout)");

    // CLI11 parses argv-style input in reverse order.
    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "bipotkit: " << e.what() << '\n';
        return 2;
    }

    auto emit = [&](const std::string& path, const auto& write) {
        if (path.empty()) {
            write(out);
            return true;
        }
        std::ofstream f(path);
        if (!f) {
            err << "bipotkit: cannot write '" << path << "'\n";
            return false;
        }
        write(f);
        f.flush();
        if (!f) {
            err << "bipotkit: write to '" << path << "' failed\n";
            return false;
        }
        return true;
    };

    try {
        if (*eval) {
            const LawConfig cfg = resolve(eval_o);
            const json r = cmd_eval(cfg, parse_vec(x_text), parse_vec(y_text));
            out << r.dump(2) << '\n';
            return 0;
        }
        if (*graph) {
            const LawConfig cfg = resolve(graph_o);
            return emit(graph_out, [&](std::ostream& os) { cmd_graph(cfg, os); }) ? 0 : 2;
        }
        const LawConfig cfg = resolve(verify_o);
        const Suite suite = parse_suite(suite_name);
        const json r = cmd_verify(cfg, suite);
        if (!emit(verify_out, [&](std::ostream& os) { os << r.dump(2) << '\n'; })) return 2;
        return r.at("passed").get<bool>() ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        err << "bipotkit: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error& e) {
        err << "bipotkit: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace bipot::cli
