#include <charconv>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "covtree/complex.hpp"
#include "covtree/error.hpp"
#include "covtree/experiment.hpp"
#include "covtree/io.hpp"
#include "covtree/render.hpp"
#include "covtree/spanning.hpp"

namespace {

using namespace covtree;

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
    } else {
        write_text_file(out_path, content);
    }
}

Boundary parse_boundary(const std::string& s) {
    if (s == "plane") return Boundary::plane;
    if (s == "torus") return Boundary::torus;
    throw ParameterError("boundary must be plane or torus, got \"" + s + "\"");
}

Norm parse_norm(const std::string& s) {
    if (s == "euclidean") return Norm::euclidean;
    if (s == "uniform") return Norm::uniform;
    throw ParameterError("norm must be euclidean or uniform, got \"" + s + "\"");
}

Scenario parse_scenario(const std::string& s) {
    if (s == "rejection") return Scenario::rejection;
    if (s == "coverage") return Scenario::coverage;
    if (s == "metrics") return Scenario::metrics;
    throw ParameterError("scenario must be rejection, coverage, or metrics, got \"" + s +
                         "\"");
}

struct CliState {
    std::size_t n = 75;
    double lambda = 1.0;
    bool use_lambda = false;
    double side = 10.0;
    std::string boundary = "plane";
    std::string norm = "euclidean";
    std::uint64_t seed = 1;

    std::string out_path;
    double radius = 2.5;
    std::string metric = "min_distance";
    std::int64_t root = -1;
    std::uint32_t hop_limit = 3;
    std::string scenario = "rejection";
    std::vector<std::size_t> n_values;
    std::vector<std::string> metric_list;
    std::size_t trials = 1000;
    std::size_t samples = 200000;
    double disk_radius = 0.0;
    std::vector<double> lambdas;
    std::size_t clique_cap = 64;
    double empirical_cap = 1.5;
    std::string render_mode = "tree";

    std::string config_path;
    bool boundary_set = false;
    bool norm_set = false;

    PointCloud sample() const {
        if (use_lambda) {
            return sample_poisson(lambda, side, parse_boundary(boundary), parse_norm(norm),
                                  seed);
        }
        return sample_binomial(n, side, parse_boundary(boundary), parse_norm(norm), seed);
    }
};

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double config_double(const std::string& key, const std::string& value) {
    double out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParameterError("config key " + key + ": \"" + value + "\" is not a number");
    }
    return out;
}

std::uint64_t config_u64(const std::string& key, const std::string& value) {
    std::uint64_t out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size()) {
        throw ParameterError("config key " + key + ": \"" + value +
                             "\" is not a non-negative integer");
    }
    return out;
}

// Loads a plain key=value file into the state before the command line is
// parsed, so explicit flags override anything the file sets.
void apply_config(CliState& s, const std::string& path) {
    const std::string text = read_text_file(path);
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw ParameterError(path + ":" + std::to_string(lineno) +
                                 ": expected key=value, got \"" + stripped + "\"");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key == "n") {
            s.n = static_cast<std::size_t>(config_u64(key, value));
        } else if (key == "lambda") {
            s.lambda = config_double(key, value);
            s.use_lambda = true;
        } else if (key == "side") {
            s.side = config_double(key, value);
        } else if (key == "boundary") {
            s.boundary = value;
            s.boundary_set = true;
        } else if (key == "norm") {
            s.norm = value;
            s.norm_set = true;
        } else if (key == "seed") {
            s.seed = config_u64(key, value);
        } else if (key == "radius") {
            s.radius = config_double(key, value);
        } else if (key == "metric") {
            s.metric = value;
            s.metric_list = {value};
        } else if (key == "root") {
            s.root = static_cast<std::int64_t>(config_u64(key, value));
        } else if (key == "hop-limit") {
            s.hop_limit = static_cast<std::uint32_t>(config_u64(key, value));
        } else if (key == "scenario") {
            s.scenario = value;
        } else if (key == "trials") {
            s.trials = static_cast<std::size_t>(config_u64(key, value));
        } else if (key == "samples") {
            s.samples = static_cast<std::size_t>(config_u64(key, value));
        } else if (key == "disk-radius") {
            s.disk_radius = config_double(key, value);
        } else if (key == "clique-cap") {
            s.clique_cap = static_cast<std::size_t>(config_u64(key, value));
        } else if (key == "max-empirical-lambda") {
            s.empirical_cap = config_double(key, value);
        } else if (key == "mode") {
            s.render_mode = value;
        } else if (key == "out") {
            s.out_path = value;
        } else {
            throw ParameterError(path + ":" + std::to_string(lineno) +
                                 ": unknown config key \"" + key + "\"");
        }
    }
}

// The --config value is consumed by a pre-scan in main before CLI11 runs;
// the registered option only documents the flag and absorbs its argument.
void attach_cloud_flags(CLI::App* cmd, CliState& s) {
    cmd->add_option("--config", s.config_path,
                    "key=value file with flag defaults; explicit flags override");
    cmd->add_option("--n", s.n, "point count for fixed-size sampling");
    auto* lam =
        cmd->add_option("--lambda", s.lambda, "Poisson intensity; overrides --n when given");
    cmd->add_option("--side", s.side, "domain side length");
    cmd->add_option("--boundary", s.boundary, "plane or torus");
    cmd->add_option("--norm", s.norm, "euclidean or uniform");
    cmd->add_option("--seed", s.seed, "base random seed");
    lam->each([&s](const std::string&) { s.use_lambda = true; });
}

void wire(CLI::App& app, CliState& s) {
    CLI::App* generate = app.add_subcommand("generate", "sample a cloud and print it");
    attach_cloud_flags(generate, s);
    generate->add_option("--out", s.out_path, "output file (default stdout)");

    CLI::App* tree = app.add_subcommand("tree", "build one communication tree");
    attach_cloud_flags(tree, s);
    tree->add_option("--radius", s.radius, "connection distance r");
    tree->add_option("--metric", s.metric, "min_distance, max_distance, or max_height");
    tree->add_option("--root", s.root, "root vertex (default: drawn from the seed)");
    tree->add_option("--out", s.out_path, "output file (default stdout)");

    CLI::App* forest = app.add_subcommand("forest", "build a hop-limited forest");
    attach_cloud_flags(forest, s);
    forest->add_option("--radius", s.radius, "connection distance r");
    forest->add_option("--metric", s.metric, "min_distance, max_distance, or max_height");
    forest->add_option("--hop-limit", s.hop_limit, "maximum root-to-vertex depth");
    forest->add_option("--out", s.out_path, "output file (default stdout)");

    CLI::App* experiment =
        app.add_subcommand("experiment", "run a simulation scenario, print CSV");
    attach_cloud_flags(experiment, s);
    experiment->add_option("--scenario", s.scenario, "rejection, coverage, or metrics");
    experiment->add_option("--n-values", s.n_values, "n grid (default 25 50 75 100)");
    experiment->add_option("--radius", s.radius, "connection distance r");
    experiment->add_option("--metric", s.metric_list,
                           "weight metrics (metrics scenario defaults to all three)");
    experiment->add_option("--trials", s.trials, "independent clouds per row");
    experiment->add_option("--samples", s.samples, "coverage probes per estimate");
    experiment->add_option("--disk-radius", s.disk_radius,
                           "coverage disk radius (default r/2)");
    experiment->add_option("--out", s.out_path, "output CSV file (default stdout)");

    CLI::App* chi =
        app.add_subcommand("chi", "expected vs empirical Euler characteristic, CSV");
    attach_cloud_flags(chi, s);
    chi->add_option("--lambda-values", s.lambdas,
                    "intensity grid (default 0.2 0.5 1 2 5 10 15)");
    chi->add_option("--radius", s.radius, "proximity parameter r");
    chi->add_option("--trials", s.trials, "realizations per intensity");
    chi->add_option("--clique-cap", s.clique_cap, "largest clique allowed in counting");
    chi->add_option("--max-empirical-lambda", s.empirical_cap,
                    "skip Monte-Carlo above this intensity");
    chi->add_option("--out", s.out_path, "output CSV file (default stdout)");

    CLI::App* render = app.add_subcommand("render", "draw the network as SVG");
    attach_cloud_flags(render, s);
    render->add_option("--radius", s.radius, "connection distance r");
    render->add_option("--metric", s.metric, "min_distance, max_distance, or max_height");
    render->add_option("--mode", s.render_mode, "complex, tree, or forest");
    render->add_option("--hop-limit", s.hop_limit, "maximum depth in forest mode");
    render->add_option("--out", s.out_path, "output SVG file (default stdout)");
}

int dispatch(const CLI::App& app, const CliState& s) {
    const CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();

    if (name == "generate") {
        emit(s.out_path, format_cloud(s.sample()));
        return 0;
    }

    if (name == "tree") {
        PointCloud cloud = s.sample();
        std::optional<VertexId> root_opt;
        if (s.root >= 0) root_opt = static_cast<VertexId>(s.root);
        Tree t = build_tree(cloud, s.radius, parse_metric(s.metric), root_opt, s.seed);
        emit(s.out_path, format_tree(t));
        return 0;
    }

    if (name == "forest") {
        PointCloud cloud = s.sample();
        Forest f = build_forest(cloud, s.radius, parse_metric(s.metric), s.hop_limit, s.seed);
        emit(s.out_path, format_forest(f));
        return 0;
    }

    if (name == "experiment") {
        ExperimentConfig config;
        config.scenario = parse_scenario(s.scenario);
        if (!s.n_values.empty()) config.n_values = s.n_values;
        config.side_a = s.side;
        config.r = s.radius;
        config.boundary = parse_boundary(s.boundary);
        config.norm = parse_norm(s.norm);
        config.trials = s.trials;
        config.base_seed = s.seed;
        config.samples = s.samples;
        config.disk_radius = s.disk_radius;
        if (!s.metric_list.empty()) {
            config.metrics.clear();
            for (const std::string& m : s.metric_list) {
                config.metrics.push_back(parse_metric(m));
            }
        } else if (config.scenario == Scenario::metrics) {
            config.metrics = {WeightMetric::min_distance, WeightMetric::max_distance,
                              WeightMetric::max_height};
        }
        ExperimentReport report;
        switch (config.scenario) {
            case Scenario::rejection: report = run_rejection_experiment(config); break;
            case Scenario::coverage: report = run_coverage_experiment(config); break;
            default: report = run_metrics_experiment(config); break;
        }
        emit(s.out_path, report.to_csv());
        return 0;
    }

    if (name == "chi") {
        ExperimentConfig config;
        config.scenario = Scenario::chi;
        config.lambda_values =
            s.lambdas.empty() ? std::vector<double>{0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 15.0}
                              : s.lambdas;
        config.side_a = s.side;
        config.r = s.radius;
        // The expectation formulas describe the torus with the uniform norm;
        // that is the default here, explicit flag or config settings still win.
        const bool boundary_given = sub->count("--boundary") > 0 || s.boundary_set;
        const bool norm_given = sub->count("--norm") > 0 || s.norm_set;
        config.boundary = boundary_given ? parse_boundary(s.boundary) : Boundary::torus;
        config.norm = norm_given ? parse_norm(s.norm) : Norm::uniform;
        config.trials = s.trials;
        config.base_seed = s.seed;
        config.clique_cap = s.clique_cap;
        config.chi_empirical_max_lambda = s.empirical_cap;
        emit(s.out_path, run_chi_experiment(config).to_csv());
        return 0;
    }

    // render
    PointCloud cloud = s.sample();
    RipsComplex cx = build_rips(cloud, s.radius);
    std::string svg;
    if (s.render_mode == "complex") {
        svg = render_svg(cloud, cx);
    } else if (s.render_mode == "tree") {
        Tree t = build_tree(cloud, s.radius, parse_metric(s.metric), std::nullopt, s.seed);
        svg = render_svg(cloud, cx, t);
    } else if (s.render_mode == "forest") {
        Forest f = build_forest(cloud, s.radius, parse_metric(s.metric), s.hop_limit, s.seed);
        svg = render_svg(cloud, cx, f);
    } else {
        throw ParameterError("mode must be complex, tree, or forest, got \"" + s.render_mode +
                             "\"");
    }
    emit(s.out_path, svg);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coverage-hole-free communication trees over random wireless clouds"};
    app.require_subcommand(1);

    CliState state;

    try {
        for (int i = 1; i < argc; ++i) {
            const std::string arg = argv[i];
            if (arg == "--config" && i + 1 < argc) {
                state.config_path = argv[i + 1];
            } else if (arg.rfind("--config=", 0) == 0) {
                state.config_path = arg.substr(9);
            }
        }
        if (!state.config_path.empty()) apply_config(state, state.config_path);
        wire(app, state);
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        return dispatch(app, state);
    } catch (const ResourceCapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
