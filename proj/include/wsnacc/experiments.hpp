#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "wsnacc/accuracy.hpp"
#include "wsnacc/clustering.hpp"
#include "wsnacc/deployment.hpp"
#include "wsnacc/spatial_stats.hpp"

namespace wsnacc {

enum class ExperimentId { Setup1, Setup2, Fig5, Fig6, Fig8, Fig9, Optimal };

std::string_view to_string(ExperimentId id) noexcept;
std::optional<ExperimentId> parse_experiment_id(std::string_view name);

/// Named noise profiles: "default", "noiseless", or five comma-separated
/// numbers "signal,observation,transmission,head_observation,power".
NoiseModel parse_noise_profile(std::string_view text);

struct ExperimentConfig {
    ExperimentId id = ExperimentId::Setup1;

    // Multi-cluster field (setup1, setup2).
    double field_width = 120.0;
    double field_height = 120.0;
    int head_rows = 5;
    int head_cols = 5;
    int normals = 100;

    // Single-cluster region (fig8, fig9): square side, grid spacing, and the
    // normal-node pool drawn per run in fig9.
    double region_side = 30.0;
    double grid_spacing = 5.0;
    int pool_size = 99;

    // Circular cluster (fig5, fig6).
    double circle_radius = 5.0;
    int circle_nodes = 4;

    CorrelationParams params{100.0, 1.0, 0.8};
    NoiseModel noise = NoiseModel::default_profile();
    std::string noise_name = "default";
    std::uint64_t seed = 1;
    int runs = 1;

    std::vector<double> radii;     // fig5
    std::vector<int> node_counts;  // fig6, fig8, fig9
    std::vector<double> ranges;    // theta1 values, one curve each

    double epsilon = 0.01;         // optimal
    bool check_properties = true;  // post-run property assertions

    /// Paper-reproduction defaults for each experiment.
    static ExperimentConfig defaults_for(ExperimentId id);

    void validate() const;
};

// -- setup 1 / 2 ------------------------------------------------------------

/// Heads on the configured grid; normals and tracing points from substreams
/// 2*run and 2*run + 1 of the seed.
Deployment build_field_deployment(const ExperimentConfig& config, int run);

struct ClusterRow {
    int head = 0;
    std::vector<int> members;
    int m = 1;
    double d_a = 0.0;
};

struct Setup1Result {
    Deployment deployment;
    ClusterAssignment assignment;
    std::vector<ClusterRow> rows;
};

struct AverageRow {
    int head = 0;
    int runs = 0;
    double mean_d_a = 0.0;
    double std_error = 0.0;
};

Setup1Result run_setup1(const ExperimentConfig& config);
std::vector<AverageRow> run_setup2(const ExperimentConfig& config);

// -- sweeps -------------------------------------------------------------------

struct SweepPoint {
    double value = 0.0;  // radius or m
    double d_a = 0.0;
    std::optional<double> std_error;
};

struct SweepCurve {
    double range = 0.0;  // theta1
    std::vector<SweepPoint> points;
};

struct SweepResult {
    std::string sweep_name;       // "radius" or "m"
    std::optional<double> area;   // adds a density column (m / area) when set
    std::vector<SweepCurve> curves;
};

/// Tracing point at the origin, head at angle 0, remaining nodes at equal
/// angles on the circle.
ClusterGeometry circle_geometry(double radius, int m);

/// Grid points of the square region (tracing point at the centre excluded),
/// farthest from the centre first; ties in row-major order.
std::vector<Position> inward_grid_order(double side, double spacing);

SweepResult run_fig5(const ExperimentConfig& config);
SweepResult run_fig6(const ExperimentConfig& config);
SweepResult run_fig8(const ExperimentConfig& config);
SweepResult run_fig9(const ExperimentConfig& config);

/// Smallest m whose accuracy is within epsilon of the curve's final value.
/// Throws NoPlateau unless the last three points lie within epsilon of each
/// other.
int find_optimal_cluster(const SweepCurve& curve, double epsilon);

struct OptimalRow {
    std::string source;  // "fig8" or "fig9"
    double range = 0.0;
    std::optional<int> optimal_m;
    double plateau_d_a = 0.0;
};

std::vector<OptimalRow> run_optimal(const ExperimentConfig& config);

// -- output -------------------------------------------------------------------

using Cell = std::variant<std::string, double, long long>;

struct ExperimentOutput {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

/// Runs the configured experiment and tabulates it with a full parameter echo.
ExperimentOutput run_experiment(const ExperimentConfig& config);

/// '#'-prefixed "key: value" header, then the table. Reals print with 6 decimals.
void write_csv(std::ostream& out, const ExperimentOutput& output);
void write_json(std::ostream& out, const ExperimentOutput& output);

}  // namespace wsnacc
