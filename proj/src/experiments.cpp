#include "wsnacc/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "wsnacc/error.hpp"
#include "wsnacc/format.hpp"
#include "wsnacc/version.hpp"

namespace wsnacc {

std::string_view to_string(ExperimentId id) noexcept {
    switch (id) {
        case ExperimentId::Setup1: return "setup1";
        case ExperimentId::Setup2: return "setup2";
        case ExperimentId::Fig5: return "fig5";
        case ExperimentId::Fig6: return "fig6";
        case ExperimentId::Fig8: return "fig8";
        case ExperimentId::Fig9: return "fig9";
        case ExperimentId::Optimal: return "optimal";
    }
    return "unknown";
}

std::optional<ExperimentId> parse_experiment_id(std::string_view name) {
    for (auto id : {ExperimentId::Setup1, ExperimentId::Setup2, ExperimentId::Fig5, ExperimentId::Fig6,
                    ExperimentId::Fig8, ExperimentId::Fig9, ExperimentId::Optimal}) {
        if (to_string(id) == name) return id;
    }
    return std::nullopt;
}

NoiseModel parse_noise_profile(std::string_view text) {
    if (text == "default") return NoiseModel::default_profile();
    if (text == "noiseless") return NoiseModel::noiseless();
    std::vector<double> values;
    std::stringstream ss{std::string(text)};
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "bad noise profile value '" + item + "'");
        }
    }
    if (values.size() != 5) {
        throw Error(ErrorCode::ParseError,
                    "noise profile needs 'default', 'noiseless' or five numbers "
                    "signal,observation,transmission,head_observation,power");
    }
    NoiseModel n{values[0], values[1], values[2], values[3], values[4]};
    n.validate();
    return n;
}

namespace {

template <class T>
std::vector<T> arithmetic(T first, T last, T step) {
    std::vector<T> out;
    for (T v = first; v <= last; v += step) out.push_back(v);
    return out;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults_for(ExperimentId id) {
    ExperimentConfig c;
    c.id = id;
    switch (id) {
        case ExperimentId::Setup1:
            break;
        case ExperimentId::Setup2:
            c.runs = 100;
            break;
        case ExperimentId::Fig5:
            c.radii = arithmetic(1.0, 50.0, 1.0);
            c.ranges = {50.0, 100.0};
            break;
        case ExperimentId::Fig6:
            c.node_counts = arithmetic(2, 20, 1);
            c.ranges = {50.0, 100.0, 200.0, 400.0};
            break;
        case ExperimentId::Fig8:
            c.node_counts = arithmetic(4, 48, 4);
            c.ranges = {50.0, 400.0};
            break;
        case ExperimentId::Fig9:
            c.node_counts = arithmetic(2, 100, 1);
            c.ranges = {50.0, 100.0, 200.0, 400.0};
            c.runs = 100;
            break;
        case ExperimentId::Optimal:
            c.ranges = {50.0, 100.0, 200.0, 400.0};
            c.runs = 100;
            break;
    }
    return c;
}

void ExperimentConfig::validate() const {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidArgument, what); };
    noise.validate();
    if (runs < 1) fail("runs must be at least 1");
    if (!(epsilon > 0.0)) fail("epsilon must be positive");
    auto increasing = [](const auto& xs) {
        return std::adjacent_find(xs.begin(), xs.end(), [](auto a, auto b) { return !(a < b); }) == xs.end();
    };
    switch (id) {
        case ExperimentId::Setup1:
        case ExperimentId::Setup2:
            FieldSpec(field_width, field_height);
            if (head_rows < 1 || head_cols < 1) fail("head grid must be at least 1x1");
            if (normals < 0) fail("normal count must be nonnegative");
            break;
        case ExperimentId::Fig5:
            if (radii.empty() || !increasing(radii)) fail("radius list must be non-empty and strictly increasing");
            if (radii.front() < 0.0) fail("radii must be nonnegative");
            if (circle_nodes < 1) fail("circle needs at least one node");
            break;
        case ExperimentId::Fig6:
        case ExperimentId::Fig8:
        case ExperimentId::Fig9:
            if (node_counts.empty() || !increasing(node_counts)) {
                fail("node-count list must be non-empty and strictly increasing");
            }
            if (node_counts.front() < 1) fail("node counts must be at least 1");
            break;
        case ExperimentId::Optimal:
            break;
    }
    if (id != ExperimentId::Setup1 && id != ExperimentId::Setup2) {
        if (ranges.empty() || !increasing(ranges)) fail("theta1 list must be non-empty and strictly increasing");
        for (double r : ranges) CorrelationParams(r, params.smoothness(), params.threshold());
    }
    if (id == ExperimentId::Fig6 && !(circle_radius >= 0.0)) fail("circle radius must be nonnegative");
    if (id == ExperimentId::Fig8) {
        const auto available = inward_grid_order(region_side, grid_spacing).size();
        if (static_cast<std::size_t>(node_counts.back()) > available) {
            fail("node count exceeds the " + std::to_string(available) + " grid points");
        }
    }
    if (id == ExperimentId::Fig9 && node_counts.back() > pool_size + 1) {
        fail("node count exceeds pool size + head");
    }
}

// -- setup 1 / 2 ------------------------------------------------------------

Deployment build_field_deployment(const ExperimentConfig& config, int run) {
    Deployment d;
    d.field = FieldSpec(config.field_width, config.field_height);
    d.seed = config.seed;
    d.heads = deploy_grid_heads(d.field, config.head_rows, config.head_cols);
    const auto stream = 2 * static_cast<std::uint64_t>(run);
    d.normals = deploy_random_normals(d.field, config.normals, config.seed, stream);
    d.tracing_points =
        assign_tracing_points(d, RandomPerCell{config.head_rows, config.head_cols, config.seed, stream + 1});
    return d;
}

namespace {

std::vector<ClusterRow> field_rows(const Deployment& d, const ClusterAssignment& a, const ExperimentConfig& config) {
    const auto reports = accuracy_for_assignment(a, d, beta_factors(config.noise), config.params, std::nullopt,
                                                 config.noise.signal);
    std::vector<ClusterRow> rows;
    for (const auto& r : reports) {
        rows.push_back({r.head_id, a.clusters.at(r.head_id).members, r.m, r.d_a});
    }
    return rows;
}

}  // namespace

Setup1Result run_setup1(const ExperimentConfig& config) {
    config.validate();
    Setup1Result out;
    out.deployment = build_field_deployment(config, 0);
    out.assignment = assign_clusters(out.deployment);
    out.rows = field_rows(out.deployment, out.assignment, config);
    return out;
}

std::vector<AverageRow> run_setup2(const ExperimentConfig& config) {
    config.validate();
    std::vector<std::vector<double>> per_head;
    std::vector<int> heads;
    for (int run = 0; run < config.runs; ++run) {
        const Deployment d = build_field_deployment(config, run);
        const auto rows = field_rows(d, assign_clusters(d), config);
        if (per_head.empty()) {
            per_head.resize(rows.size());
            for (const auto& r : rows) heads.push_back(r.head);
        }
        for (std::size_t i = 0; i < rows.size(); ++i) per_head[i].push_back(rows[i].d_a);
    }
    std::vector<AverageRow> out;
    for (std::size_t i = 0; i < per_head.size(); ++i) {
        const auto& xs = per_head[i];
        const double n = static_cast<double>(xs.size());
        double mean = 0.0;
        for (double x : xs) mean += x;
        mean /= n;
        double ss = 0.0;
        for (double x : xs) ss += (x - mean) * (x - mean);
        const double se = xs.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
        out.push_back({heads[i], static_cast<int>(xs.size()), mean, se});
    }
    return out;
}

// -- sweeps -------------------------------------------------------------------

ClusterGeometry circle_geometry(double radius, int m) {
    if (m < 1) throw Error(ErrorCode::InvalidArgument, "circle needs at least one node");
    auto at = [&](int k) {
        const double angle = 2.0 * std::numbers::pi * k / m;
        return Position{radius * std::cos(angle), radius * std::sin(angle)};
    };
    std::vector<Position> members;
    for (int k = 1; k < m; ++k) members.push_back(at(k));
    return ClusterGeometry({0.0, 0.0}, at(0), members);
}

std::vector<Position> inward_grid_order(double side, double spacing) {
    if (!(side > 0.0) || !(spacing > 0.0)) throw Error(ErrorCode::InvalidArgument, "bad grid");
    const int steps = static_cast<int>(std::floor(side / spacing + 1e-9));
    const double centre = side / 2.0;
    struct Item {
        double d2;
        int row;
        int col;
    };
    std::vector<Item> items;
    for (int r = 0; r <= steps; ++r) {
        for (int c = 0; c <= steps; ++c) {
            const double dx = c * spacing - centre;
            const double dy = r * spacing - centre;
            const double d2 = dx * dx + dy * dy;
            if (d2 == 0.0) continue;
            items.push_back({d2, r, c});
        }
    }
    std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.d2 > b.d2; });
    std::vector<Position> out;
    for (const auto& it : items) out.push_back({it.col * spacing, it.row * spacing});
    return out;
}

namespace {

[[noreturn]] void violated(std::string_view experiment, const std::string& what) {
    throw Error(ErrorCode::PropertyViolation, std::string(experiment) + ": " + what);
}

void check_range_order(std::string_view experiment, const SweepResult& r) {
    for (std::size_t c = 1; c < r.curves.size(); ++c) {
        for (std::size_t i = 0; i < r.curves[c].points.size(); ++i) {
            if (r.curves[c].points[i].d_a < r.curves[c - 1].points[i].d_a) {
                violated(experiment, "accuracy at theta1=" + fixed(r.curves[c].range, 1) +
                                         " falls below theta1=" + fixed(r.curves[c - 1].range, 1) + " at " +
                                         r.sweep_name + "=" + fixed(r.curves[c].points[i].value, 1));
            }
        }
    }
}

CorrelationParams with_range(const ExperimentConfig& c, double range) {
    return {range, c.params.smoothness(), c.params.threshold()};
}

}  // namespace

SweepResult run_fig5(const ExperimentConfig& config) {
    config.validate();
    const BetaFactors betas = beta_factors(config.noise);
    SweepResult out{"radius", std::nullopt, {}};
    for (double range : config.ranges) {
        SweepCurve curve{range, {}};
        for (double radius : config.radii) {
            const auto rep = closed_form_accuracy(circle_geometry(radius, config.circle_nodes), betas,
                                                  with_range(config, range), config.noise.signal);
            curve.points.push_back({radius, rep.d_a, std::nullopt});
        }
        out.curves.push_back(std::move(curve));
    }
    if (config.check_properties) {
        for (const auto& c : out.curves) {
            for (std::size_t i = 1; i < c.points.size(); ++i) {
                if (!(c.points[i].d_a < c.points[i - 1].d_a)) {
                    violated("fig5", "accuracy does not decrease with radius at theta1=" + fixed(c.range, 1));
                }
            }
        }
        check_range_order("fig5", out);
    }
    return out;
}

SweepResult run_fig6(const ExperimentConfig& config) {
    config.validate();
    const BetaFactors betas = beta_factors(config.noise);
    SweepResult out{"m", std::nullopt, {}};
    for (double range : config.ranges) {
        SweepCurve curve{range, {}};
        for (int m : config.node_counts) {
            const auto rep = closed_form_accuracy(circle_geometry(config.circle_radius, m), betas,
                                                  with_range(config, range), config.noise.signal);
            curve.points.push_back({static_cast<double>(m), rep.d_a, std::nullopt});
        }
        out.curves.push_back(std::move(curve));
    }
    if (config.check_properties) {
        for (const auto& c : out.curves) {
            for (std::size_t i = 1; i < c.points.size(); ++i) {
                const auto& prev = c.points[i - 1];
                const auto& cur = c.points[i];
                if (prev.value == 2.0 && cur.value == 3.0 && !(cur.d_a > prev.d_a)) {
                    violated("fig6", "no improvement from m=2 to m=3 at theta1=" + fixed(c.range, 1));
                }
                if (prev.value >= 8.0 && cur.value == prev.value + 1.0 && !(std::abs(cur.d_a - prev.d_a) < 0.005)) {
                    violated("fig6", "no plateau beyond m=8 at theta1=" + fixed(c.range, 1));
                }
            }
        }
        check_range_order("fig6", out);
    }
    return out;
}

SweepResult run_fig8(const ExperimentConfig& config) {
    config.validate();
    const BetaFactors betas = beta_factors(config.noise);
    const FieldSpec region(config.region_side, config.region_side);
    const Position tracing{config.region_side / 2.0, config.region_side / 2.0};
    const auto order = inward_grid_order(config.region_side, config.grid_spacing);

    SweepResult out{"m", config.region_side * config.region_side, {}};
    for (double range : config.ranges) {
        SweepCurve curve{range, {}};
        for (int m : config.node_counts) {
            // The farthest point, the (0,0) corner, is the head.
            std::vector<Placement> placements;
            placements.push_back({NodeKind::ClusterHead, order[0]});
            for (int k = 1; k < m; ++k) placements.push_back({NodeKind::Normal, order[k]});
            const PlacedNodes nodes = place_nodes(region, placements);
            std::vector<Position> members;
            for (const auto& n : nodes.normals) members.push_back(n.position);
            const ClusterGeometry g(tracing, nodes.heads.front().position, members);
            const auto rep = closed_form_accuracy(g, betas, with_range(config, range), config.noise.signal);
            curve.points.push_back({static_cast<double>(m), rep.d_a, std::nullopt});
        }
        out.curves.push_back(std::move(curve));
    }
    if (config.check_properties) check_range_order("fig8", out);
    return out;
}

SweepResult run_fig9(const ExperimentConfig& config) {
    config.validate();
    const BetaFactors betas = beta_factors(config.noise);
    const FieldSpec region(config.region_side, config.region_side);
    const Position tracing{config.region_side / 2.0, config.region_side / 2.0};
    const Position head{0.0, 0.0};

    const std::size_t nr = config.ranges.size();
    const std::size_t nm = config.node_counts.size();
    // d_a[range][count][run]
    std::vector<std::vector<std::vector<double>>> d_a(nr, std::vector<std::vector<double>>(nm));
    for (int run = 0; run < config.runs; ++run) {
        const auto pool = deploy_random_normals(region, config.pool_size, config.seed, static_cast<std::uint64_t>(run));
        for (std::size_t mi = 0; mi < nm; ++mi) {
            std::vector<Position> members;
            for (int k = 0; k + 1 < config.node_counts[mi]; ++k) members.push_back(pool[k].position);
            const ClusterGeometry g(tracing, head, members);
            for (std::size_t ri = 0; ri < nr; ++ri) {
                d_a[ri][mi].push_back(
                    closed_form_accuracy(g, betas, with_range(config, config.ranges[ri]), config.noise.signal).d_a);
            }
        }
    }

    SweepResult out{"m", std::nullopt, {}};
    for (std::size_t ri = 0; ri < nr; ++ri) {
        SweepCurve curve{config.ranges[ri], {}};
        for (std::size_t mi = 0; mi < nm; ++mi) {
            const auto& xs = d_a[ri][mi];
            const double n = static_cast<double>(xs.size());
            double mean = 0.0;
            for (double x : xs) mean += x;
            mean /= n;
            std::optional<double> se;
            if (xs.size() > 1) {
                double ss = 0.0;
                for (double x : xs) ss += (x - mean) * (x - mean);
                se = std::sqrt(ss / (n - 1.0) / n);
            }
            curve.points.push_back({static_cast<double>(config.node_counts[mi]), mean, se});
        }
        out.curves.push_back(std::move(curve));
    }
    if (config.check_properties) check_range_order("fig9", out);
    return out;
}

int find_optimal_cluster(const SweepCurve& curve, double epsilon) {
    if (curve.points.empty()) throw Error(ErrorCode::InvalidArgument, "empty sweep");
    if (!(epsilon > 0.0)) throw Error(ErrorCode::InvalidArgument, "epsilon must be positive");
    const auto& pts = curve.points;
    const std::size_t tail = std::min<std::size_t>(3, pts.size());
    const auto [lo, hi] = std::minmax_element(pts.end() - static_cast<std::ptrdiff_t>(tail), pts.end(),
                                              [](const auto& a, const auto& b) { return a.d_a < b.d_a; });
    if (!(hi->d_a - lo->d_a <= epsilon)) {
        throw Error(ErrorCode::NoPlateau, "sweep at theta1=" + fixed(curve.range, 1) + " does not settle within " +
                                              fixed(epsilon));
    }
    const double final_value = pts.back().d_a;
    for (const auto& p : pts) {
        if (std::abs(p.d_a - final_value) <= epsilon) return static_cast<int>(p.value);
    }
    return static_cast<int>(pts.back().value);
}

std::vector<OptimalRow> run_optimal(const ExperimentConfig& config) {
    config.validate();
    std::vector<OptimalRow> rows;
    auto collect = [&](std::string source, ExperimentConfig sub) {
        sub.params = config.params;
        sub.noise = config.noise;
        sub.noise_name = config.noise_name;
        sub.seed = config.seed;
        sub.ranges = config.ranges;
        sub.region_side = config.region_side;
        sub.grid_spacing = config.grid_spacing;
        sub.check_properties = config.check_properties;
        const SweepResult r = sub.id == ExperimentId::Fig8 ? run_fig8(sub) : run_fig9(sub);
        for (const auto& c : r.curves) {
            OptimalRow row{source, c.range, std::nullopt, c.points.back().d_a};
            try {
                row.optimal_m = find_optimal_cluster(c, config.epsilon);
            } catch (const Error& e) {
                if (e.code() != ErrorCode::NoPlateau) throw;
            }
            rows.push_back(std::move(row));
        }
    };
    collect("fig8", ExperimentConfig::defaults_for(ExperimentId::Fig8));
    ExperimentConfig fig9 = ExperimentConfig::defaults_for(ExperimentId::Fig9);
    fig9.runs = config.runs;
    fig9.pool_size = config.pool_size;
    fig9.node_counts = arithmetic(2, config.pool_size + 1, 1);
    collect("fig9", fig9);
    return rows;
}

// -- output -------------------------------------------------------------------

namespace {

template <class T>
std::string join(const std::vector<T>& xs, char sep, int decimals = -1) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i > 0) s += sep;
        if constexpr (std::is_floating_point_v<T>) {
            s += fixed(xs[i], decimals < 0 ? 6 : decimals);
        } else if constexpr (std::is_same_v<T, std::string>) {
            s += xs[i];
        } else {
            s += std::to_string(xs[i]);
        }
    }
    return s;
}

std::vector<std::pair<std::string, std::string>> common_meta(const ExperimentConfig& c) {
    const BetaFactors b = beta_factors(c.noise);
    std::vector<std::pair<std::string, std::string>> meta = {
        {"version", std::string(kVersion)},
        {"experiment", std::string(to_string(c.id))},
        {"seed", std::to_string(c.seed)},
        {"runs", std::to_string(c.runs)},
        {"rng", std::string(kRngName)},
        {"theta1", fixed(c.params.range())},
        {"theta2", fixed(c.params.smoothness())},
        {"tau", fixed(c.params.threshold())},
        {"log_base", std::string(kLogBase)},
        {"noise_profile", c.noise_name},
        {"noise", "signal=" + fixed(c.noise.signal) + " observation=" + fixed(c.noise.observation) +
                      " transmission=" + fixed(c.noise.transmission) +
                      " head_observation=" + fixed(c.noise.head_observation) + " power=" + fixed(c.noise.power)},
        {"beta", fixed(b.beta)},
        {"beta_ch", fixed(b.beta_ch)},
        {"closed_form", std::string(kClosedFormNote)},
    };
    if (!c.ranges.empty()) meta.emplace_back("theta1_sweep", join(c.ranges, ';', 1));
    return meta;
}

void append_sweep(ExperimentOutput& out, const SweepResult& r) {
    const bool has_se = !r.curves.empty() && !r.curves.front().points.empty() &&
                        r.curves.front().points.front().std_error.has_value();
    out.columns = {"theta1", r.sweep_name};
    if (r.area) out.columns.push_back("density");
    out.columns.push_back("d_a");
    if (has_se) out.columns.push_back("std_err");
    for (const auto& c : r.curves) {
        for (const auto& p : c.points) {
            std::vector<Cell> row{c.range};
            if (r.sweep_name == "m") {
                row.emplace_back(static_cast<long long>(p.value));
            } else {
                row.emplace_back(p.value);
            }
            if (r.area) row.emplace_back(p.value / *r.area);
            row.emplace_back(p.d_a);
            if (has_se) row.emplace_back(p.std_error.value_or(0.0));
            out.rows.push_back(std::move(row));
        }
    }
}

}  // namespace

ExperimentOutput run_experiment(const ExperimentConfig& config) {
    ExperimentOutput out;
    out.meta = common_meta(config);
    auto meta = [&](std::string k, std::string v) { out.meta.emplace_back(std::move(k), std::move(v)); };

    switch (config.id) {
        case ExperimentId::Setup1:
        case ExperimentId::Setup2: {
            meta("field", fixed(config.field_width) + "x" + fixed(config.field_height));
            meta("head_grid", std::to_string(config.head_rows) + "x" + std::to_string(config.head_cols) +
                                  " cell centres");
            meta("normals", std::to_string(config.normals));
            meta("tracing_points", "one uniform per head grid cell");
            meta("max_cluster_radius", fixed(max_cluster_radius(config.params)));
            meta("cluster_count_bound",
                 std::to_string(cluster_count_bound(std::min(config.field_width, config.field_height), config.params)));
            if (config.id == ExperimentId::Setup1) {
                const auto r = run_setup1(config);
                out.columns = {"head", "members", "m", "d_a"};
                for (const auto& row : r.rows) {
                    out.rows.push_back({"CH" + std::to_string(row.head), join(row.members, ';'),
                                        static_cast<long long>(row.m), row.d_a});
                }
            } else {
                meta("per_run", "normal positions and tracing points re-randomized; heads fixed");
                out.columns = {"head", "runs", "mean_d_a", "std_err"};
                for (const auto& row : run_setup2(config)) {
                    out.rows.push_back({"CH" + std::to_string(row.head), static_cast<long long>(row.runs),
                                        row.mean_d_a, row.std_error});
                }
            }
            break;
        }
        case ExperimentId::Fig5:
        case ExperimentId::Fig6:
            meta("placement", "tracing point at circle centre; head at angle 0; nodes at equal angles");
            if (config.id == ExperimentId::Fig5) {
                meta("circle_nodes", std::to_string(config.circle_nodes));
                append_sweep(out, run_fig5(config));
            } else {
                meta("circle_radius", fixed(config.circle_radius));
                append_sweep(out, run_fig6(config));
            }
            break;
        case ExperimentId::Fig8:
            meta("region", fixed(config.region_side) + "x" + fixed(config.region_side));
            meta("placement", "grid spacing " + fixed(config.grid_spacing) +
                                  "; farthest-from-centre first, ties row-major; head at (0,0)");
            append_sweep(out, run_fig8(config));
            break;
        case ExperimentId::Fig9:
            meta("region", fixed(config.region_side) + "x" + fixed(config.region_side));
            meta("placement", "head at (0,0); tracing point at centre; first m-1 of " +
                                  std::to_string(config.pool_size) + " uniform normals per run");
            append_sweep(out, run_fig9(config));
            break;
        case ExperimentId::Optimal:
            meta("epsilon", fixed(config.epsilon));
            out.columns = {"source", "theta1", "optimal_m", "plateau_d_a"};
            for (const auto& row : run_optimal(config)) {
                out.rows.push_back({row.source, row.range,
                                    row.optimal_m ? Cell{static_cast<long long>(*row.optimal_m)} : Cell{"none"},
                                    row.plateau_d_a});
            }
            break;
    }
    return out;
}

void write_csv(std::ostream& out, const ExperimentOutput& o) {
    for (const auto& [k, v] : o.meta) out << "# " << k << ": " << v << '\n';
    out << join(o.columns, ',') << '\n';
    for (const auto& row : o.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) out << ',';
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, double>) {
                        out << fixed(v);
                    } else {
                        out << v;
                    }
                },
                row[i]);
        }
        out << '\n';
    }
}

}  // namespace wsnacc
