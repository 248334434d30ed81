#include <doctest.h>

#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>

#include "wsnacc/error.hpp"
#include "wsnacc/experiments.hpp"

using namespace wsnacc;

namespace {

std::string csv_of(const ExperimentConfig& c) {
    std::ostringstream out;
    write_csv(out, run_experiment(c));
    return out.str();
}

const SweepCurve& curve_for(const SweepResult& r, double range) {
    for (const auto& c : r.curves)
        if (c.range == range) return c;
    FAIL("no curve for theta1 " << range);
    return r.curves.front();
}

double at(const SweepCurve& c, double value) {
    for (const auto& p : c.points)
        if (p.value == value) return p.d_a;
    FAIL("no point at " << value);
    return 0.0;
}

}  // namespace

TEST_CASE("experiment ids and noise profiles parse") {
    CHECK(parse_experiment_id("fig8") == ExperimentId::Fig8);
    CHECK(parse_experiment_id("optimal") == ExperimentId::Optimal);
    CHECK_FALSE(parse_experiment_id("fig7").has_value());

    CHECK(parse_noise_profile("noiseless").observation == 0.0);
    CHECK(parse_noise_profile("default").head_observation == 0.06);
    const auto custom = parse_noise_profile("2,0.1,0.2,0.3,5");
    CHECK(custom.signal == 2.0);
    CHECK(custom.power == 5.0);
    CHECK_THROWS_AS(parse_noise_profile("1,2"), Error);
    CHECK_THROWS_AS(parse_noise_profile("1,x,0,0,1"), Error);
    CHECK_THROWS_AS(parse_noise_profile("1,-1,0,0,1"), Error);
}

TEST_CASE("config validation") {
    auto c = ExperimentConfig::defaults_for(ExperimentId::Fig6);
    CHECK_NOTHROW(c.validate());
    c.node_counts = {};
    CHECK_THROWS_AS(c.validate(), Error);
    c.node_counts = {3, 2};
    CHECK_THROWS_AS(c.validate(), Error);

    auto r = ExperimentConfig::defaults_for(ExperimentId::Setup2);
    r.runs = 0;
    CHECK_THROWS_AS(r.validate(), Error);

    auto g = ExperimentConfig::defaults_for(ExperimentId::Fig8);
    g.node_counts = {4, 52};
    CHECK_THROWS_AS(g.validate(), Error);
}

TEST_CASE("setup 1 reproduces the per-cluster table shape") {
    const auto cfg = ExperimentConfig::defaults_for(ExperimentId::Setup1);
    const auto r = run_setup1(cfg);
    REQUIRE(r.rows.size() == 25);
    int members = 0;
    std::set<int> seen;
    for (const auto& row : r.rows) {
        members += static_cast<int>(row.members.size());
        seen.insert(row.members.begin(), row.members.end());
        CHECK(row.m == static_cast<int>(row.members.size()) + 1);
        CHECK(row.d_a > 0.6);
        CHECK(row.d_a < 0.95);
    }
    CHECK(members == 100);
    CHECK(seen.size() == 100);
    CHECK(csv_of(cfg) == csv_of(cfg));

    auto other = cfg;
    other.seed = 2;
    CHECK(csv_of(cfg) != csv_of(other));
}

TEST_CASE("setup 2 averages over runs") {
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Setup2);

    SUBCASE("a single run equals setup 1") {
        cfg.runs = 1;
        const auto avg = run_setup2(cfg);
        const auto one = run_setup1(cfg);
        REQUIRE(avg.size() == one.rows.size());
        for (std::size_t i = 0; i < avg.size(); ++i) {
            CHECK(avg[i].head == one.rows[i].head);
            CHECK(avg[i].mean_d_a == one.rows[i].d_a);
        }
    }

    SUBCASE("hundred runs stay in band and reproduce") {
        const auto a = run_setup2(cfg);
        const auto b = run_setup2(cfg);
        REQUIRE(a.size() == 25);
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].runs == 100);
            CHECK(a[i].mean_d_a > 0.6);
            CHECK(a[i].mean_d_a < 1.0);
            CHECK(a[i].std_error > 0.0);
            CHECK(a[i].mean_d_a == b[i].mean_d_a);
        }
    }
}

TEST_CASE("fig5: circle sweep") {
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig5);
    cfg.noise = NoiseModel::noiseless();
    const auto r = run_fig5(cfg);
    REQUIRE(r.curves.size() == 2);
    for (const auto& c : r.curves) {
        for (std::size_t i = 1; i < c.points.size(); ++i) CHECK(c.points[i].d_a < c.points[i - 1].d_a);
    }
    for (std::size_t i = 0; i < r.curves[0].points.size(); ++i) {
        CHECK(r.curves[1].points[i].d_a >= r.curves[0].points[i].d_a);
    }
    CHECK(at(curve_for(r, 50), 5) == doctest::Approx(0.9209).epsilon(1e-4));
    CHECK(at(curve_for(r, 100), 10) == doctest::Approx(0.9209).epsilon(1e-4));

    cfg.radii = {1e-9, 1e-3};
    const auto tiny = run_fig5(cfg);
    CHECK(tiny.curves[0].points[0].d_a == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("fig6: nodes on a fixed circle") {
    for (const char* profile : {"default", "noiseless"}) {
        auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig6);
        cfg.noise = parse_noise_profile(profile);
        const auto r = run_fig6(cfg);
        REQUIRE(r.curves.size() == 4);
        for (const auto& c : r.curves) {
            CHECK(at(c, 3) > at(c, 2));
            for (int m = 8; m < 20; ++m) CHECK(std::abs(at(c, m + 1) - at(c, m)) < 0.005);
        }
    }
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig6);
    cfg.noise = NoiseModel::noiseless();
    const auto r = run_fig6(cfg);
    CHECK(at(curve_for(r, 50), 2) == doctest::Approx(0.9003).epsilon(1e-4));
    CHECK(at(curve_for(r, 50), 3) == doctest::Approx(0.9157).epsilon(1e-4));
}

TEST_CASE("fig6 raises a property violation when the plateau is missing") {
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig6);
    cfg.circle_radius = 60.0;
    cfg.ranges = {20.0};
    try {
        run_fig6(cfg);
        FAIL("expected PropertyViolation");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PropertyViolation);
    }
    cfg.check_properties = false;
    CHECK_NOTHROW(run_fig6(cfg));
}

TEST_CASE("fig8: grid cluster grown from the corners inward") {
    const auto order = inward_grid_order(30, 5);
    REQUIRE(order.size() == 48);
    CHECK(order[0] == Position{0, 0});
    const std::set<std::pair<double, double>> corners{{0, 0}, {30, 0}, {0, 30}, {30, 30}};
    for (int k = 0; k < 4; ++k) CHECK(corners.count({order[k].x, order[k].y}) == 1);
    for (std::size_t k = 1; k < order.size(); ++k) {
        CHECK(distance(order[k], {15, 15}) <= distance(order[k - 1], {15, 15}) + 1e-12);
    }

    const auto r = run_fig8(ExperimentConfig::defaults_for(ExperimentId::Fig8));
    REQUIRE(r.area.has_value());
    CHECK(*r.area == 900.0);
    // Cross-checked against an independent Python evaluation of the same growth order.
    CHECK(at(curve_for(r, 50), 4) == doctest::Approx(0.6458).epsilon(1e-4));
    CHECK(at(curve_for(r, 50), 8) == doctest::Approx(0.6662).epsilon(1e-4));
    CHECK(at(curve_for(r, 400), 4) == doctest::Approx(0.9265).epsilon(1e-4));
    CHECK(at(curve_for(r, 400), 16) == doctest::Approx(0.9475).epsilon(1e-4));
    CHECK(at(curve_for(r, 400), 48) == doctest::Approx(0.9628).epsilon(1e-4));
    CHECK(at(curve_for(r, 400), 4) > at(curve_for(r, 50), 4));
}

TEST_CASE("fig9: averaged random cluster") {
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig9);
    cfg.runs = 30;
    cfg.node_counts = {2, 5, 10, 15, 20, 40, 100};
    const auto r = run_fig9(cfg);
    REQUIRE(r.curves.size() == 4);
    for (const auto& c : r.curves) {
        for (const auto& p : c.points) REQUIRE(p.std_error.has_value());
    }
    const auto& c400 = curve_for(r, 400);
    CHECK(std::abs(at(c400, 20) - at(c400, 100)) < 0.01);
    CHECK(at(curve_for(r, 400), 20) > at(curve_for(r, 50), 20));
    CHECK(csv_of(cfg) == csv_of(cfg));
}

TEST_CASE("optimal cluster search") {
    auto make = [](std::vector<double> values) {
        SweepCurve c{400, {}};
        for (std::size_t i = 0; i < values.size(); ++i) c.points.push_back({static_cast<double>(i + 2), values[i], {}});
        return c;
    };
    CHECK(find_optimal_cluster(make({0.9, 0.9, 0.9, 0.9}), 0.01) == 2);
    CHECK(find_optimal_cluster(make({0.5, 0.8, 0.952, 0.956, 0.96}), 0.01) == 4);
    try {
        find_optimal_cluster(make({0.1, 0.2, 0.3, 0.4, 0.5}), 0.01);
        FAIL("expected NoPlateau");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NoPlateau);
    }

    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig9);
    cfg.ranges = {400};
    const int m = find_optimal_cluster(run_fig9(cfg).curves.front(), 0.01);
    CHECK(m >= 10);
    CHECK(m <= 20);
}

TEST_CASE("experiment output carries a full parameter echo") {
    auto cfg = ExperimentConfig::defaults_for(ExperimentId::Fig6);
    cfg.seed = 99;
    const auto out = run_experiment(cfg);
    std::ostringstream csv;
    write_csv(csv, out);
    const std::string text = csv.str();
    for (const char* key : {"# version: ", "# experiment: fig6", "# seed: 99", "# rng: ", "# theta2: ", "# tau: ",
                            "# noise_profile: default", "# beta: ", "# log_base: natural", "# placement: ",
                            "# theta1_sweep: 50.0;100.0;200.0;400.0"}) {
        CHECK_MESSAGE(text.find(key) != std::string::npos, key);
    }
    CHECK(text.find("theta1,m,d_a\n50.000000,2,") != std::string::npos);

    std::ostringstream js;
    write_json(js, out);
    const auto doc = nlohmann::json::parse(js.str());
    CHECK(doc["meta"]["seed"] == "99");
    CHECK(doc["rows"].size() == 4 * 19);
    CHECK(doc["rows"][0]["m"] == 2);
}
