// wsnacc command-line driver: deploy a field, cluster it, score it, or run
// one of the reproduction experiments.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>

#include "wsnacc/accuracy.hpp"
#include "wsnacc/clustering.hpp"
#include "wsnacc/deployment.hpp"
#include "wsnacc/error.hpp"
#include "wsnacc/experiments.hpp"
#include "wsnacc/format.hpp"
#include "wsnacc/version.hpp"

namespace {

using namespace wsnacc;

struct CommonOptions {
    std::optional<std::uint64_t> seed;
    std::optional<double> theta1;
    std::optional<double> theta2;
    std::optional<double> tau;
    std::string noise_profile = "default";
    std::optional<int> runs;
    std::string out;
    std::string format = "csv";

    CorrelationParams params(const CorrelationParams& fallback) const {
        return {theta1.value_or(fallback.range()), theta2.value_or(fallback.smoothness()),
                tau.value_or(fallback.threshold())};
    }
};

// Writes to --out, or stdout when unset.
void emit(const CommonOptions& common, const std::function<void(std::ostream&)>& body) {
    if (common.out.empty()) {
        body(std::cout);
        return;
    }
    std::ofstream file(common.out, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot open " + common.out);
    body(file);
}

Deployment load_deployment(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open " + path);
    return read_deployment(in);
}

const CorrelationParams kFieldDefaults = ExperimentConfig{}.params;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(kVersion) + ": clustered sensor-field accuracy simulator"};
    app.set_config("--config", "", "Config file (INI/TOML); command-line flags take precedence");
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(kVersion));

    CommonOptions common;
    app.add_option("--seed", common.seed, "Random seed");
    app.add_option("--theta1", common.theta1, "Kernel range parameter (m)");
    app.add_option("--theta2", common.theta2, "Kernel smoothness parameter, (0, 2]");
    app.add_option("--tau", common.tau, "Correlation threshold, (0, 1)");
    app.add_option("--noise-profile", common.noise_profile,
                   "default | noiseless | signal,observation,transmission,head_observation,power");
    app.add_option("--runs", common.runs, "Independent runs to average");
    app.add_option("--out", common.out, "Output path (stdout when omitted)");
    app.add_option("--format", common.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

    // deploy
    auto* deploy = app.add_subcommand("deploy", "Generate a grid-of-heads deployment with random normal nodes");
    double width = 120.0;
    double height = 120.0;
    int rows = 5;
    int cols = 5;
    int normals = 100;
    bool no_tracing = false;
    deploy->add_option("--width", width, "Field width (m)");
    deploy->add_option("--height", height, "Field height (m)");
    deploy->add_option("--rows", rows, "Head grid rows");
    deploy->add_option("--cols", cols, "Head grid columns");
    deploy->add_option("--normals", normals, "Number of normal nodes");
    deploy->add_flag("--no-tracing-points", no_tracing, "Omit the per-cell tracing points");

    // cluster
    auto* cluster = app.add_subcommand("cluster", "Assign normal nodes to their nearest cluster head");
    std::string deployment_path;
    cluster->add_option("--deployment", deployment_path, "Deployment file")->required();

    // accuracy
    auto* accuracy = app.add_subcommand("accuracy", "Per-cluster data accuracy for a deployment");
    std::string method = "closed_form";
    std::size_t samples = 100000;
    unsigned workers = 1;
    accuracy->add_option("--deployment", deployment_path, "Deployment file with tracing points")->required();
    accuracy->add_option("--method", method, "Estimator")->check(CLI::IsMember({"closed_form", "monte_carlo"}));
    accuracy->add_option("--samples", samples, "Monte-Carlo draws per cluster")->check(CLI::Range(100, 100000000));
    accuracy->add_option("--workers", workers, "Monte-Carlo worker threads")->check(CLI::Range(1, 256));

    // experiment
    auto* experiment = app.add_subcommand("experiment", "Run a reproduction experiment");
    std::string experiment_name;
    std::vector<double> ranges;
    std::vector<double> radii;
    std::vector<int> node_counts;
    std::optional<double> epsilon;
    bool no_check = false;
    experiment->add_option("id", experiment_name, "setup1|setup2|fig5|fig6|fig8|fig9|optimal")
        ->required()
        ->check(CLI::IsMember({"setup1", "setup2", "fig5", "fig6", "fig8", "fig9", "optimal"}));
    experiment->add_option("--ranges", ranges, "theta1 values, one curve each")->delimiter(',');
    experiment->add_option("--radii", radii, "Circle radii (fig5)")->delimiter(',');
    experiment->add_option("--node-counts", node_counts, "Cluster sizes m (fig6, fig8, fig9)")->delimiter(',');
    experiment->add_option("--epsilon", epsilon, "Plateau tolerance (optimal)");
    experiment->add_flag("--no-check", no_check, "Skip the post-run property assertions");

    CLI11_PARSE(app, argc, argv);

    try {
        const NoiseModel noise = parse_noise_profile(common.noise_profile);
        const bool json = common.format == "json";

        if (*deploy) {
            Deployment d;
            d.field = FieldSpec(width, height);
            d.seed = common.seed.value_or(1);
            d.heads = deploy_grid_heads(d.field, rows, cols);
            d.normals = deploy_random_normals(d.field, normals, d.seed, 0);
            if (!no_tracing) d.tracing_points = assign_tracing_points(d, RandomPerCell{rows, cols, d.seed, 1});
            emit(common, [&](std::ostream& out) { write_deployment(out, d); });
        } else if (*cluster) {
            const Deployment d = load_deployment(deployment_path);
            const ClusterAssignment a = assign_clusters(d);
            emit(common, [&](std::ostream& out) {
                if (!json) {
                    write_assignment_csv(out, a);
                    return;
                }
                const CorrelationParams p = common.params(kFieldDefaults);
                nlohmann::ordered_json doc;
                doc["version"] = kVersion;
                doc["theta1"] = p.range();
                doc["theta2"] = p.smoothness();
                doc["tau"] = p.threshold();
                for (const auto& [head, c] : a.clusters) {
                    doc["clusters"].push_back({{"head_id", "CH" + std::to_string(head)}, {"members", c.members}});
                }
                doc["diagnostics"] = nlohmann::ordered_json::array();
                for (const auto& row : membership_diagnostics(a, d, p)) {
                    doc["diagnostics"].push_back({{"node", row.node},
                                                  {"head_id", "CH" + std::to_string(row.head)},
                                                  {"distance", row.distance},
                                                  {"correlation", row.correlation},
                                                  {"strongly_correlated", row.strongly_correlated}});
                }
                out << doc.dump(2) << '\n';
            });
        } else if (*accuracy) {
            const Deployment d = load_deployment(deployment_path);
            const CorrelationParams p = common.params(kFieldDefaults);
            const std::uint64_t seed = common.seed.value_or(d.seed);
            std::optional<MonteCarloOptions> mc;
            if (method == "monte_carlo") mc = MonteCarloOptions{noise, samples, seed, workers};
            const auto reports =
                accuracy_for_assignment(assign_clusters(d), d, beta_factors(noise), p, mc, noise.signal);
            emit(common, [&](std::ostream& out) {
                if (json) {
                    write_reports_json(out, reports, RunEcho{p, noise, seed});
                } else {
                    write_reports_csv(out, reports);
                }
            });
        } else if (*experiment) {
            ExperimentConfig cfg = ExperimentConfig::defaults_for(*parse_experiment_id(experiment_name));
            cfg.params = common.params(cfg.params);
            cfg.noise = noise;
            cfg.noise_name = common.noise_profile;
            if (common.seed) cfg.seed = *common.seed;
            if (common.runs) cfg.runs = *common.runs;
            if (!ranges.empty()) {
                cfg.ranges = ranges;
            } else if (common.theta1 && !cfg.ranges.empty()) {
                cfg.ranges = {*common.theta1};
            }
            if (!radii.empty()) cfg.radii = radii;
            if (!node_counts.empty()) cfg.node_counts = node_counts;
            if (epsilon) cfg.epsilon = *epsilon;
            cfg.check_properties = !no_check;
            const ExperimentOutput result = run_experiment(cfg);
            emit(common, [&](std::ostream& out) {
                if (json) {
                    write_json(out, result);
                } else {
                    write_csv(out, result);
                }
            });
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
