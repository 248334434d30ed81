#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "wsnacc/clustering.hpp"
#include "wsnacc/error.hpp"

using namespace wsnacc;

namespace {

Deployment two_heads(std::vector<Position> normals) {
    Deployment d;
    d.field = FieldSpec(10, 10);
    d.heads = {{{NodeKind::ClusterHead, 1}, {0, 0}}, {{NodeKind::ClusterHead, 2}, {10, 0}}};
    for (std::size_t i = 0; i < normals.size(); ++i) {
        d.normals.push_back({{NodeKind::Normal, static_cast<int>(i) + 1}, normals[i]});
    }
    return d;
}

}  // namespace

TEST_CASE("nearest-head assignment") {
    SUBCASE("single head takes every node") {
        Deployment d;
        d.field = FieldSpec(50, 50);
        d.heads = deploy_grid_heads(d.field, 1, 1);
        d.normals = deploy_random_normals(d.field, 20, 3);
        const auto a = assign_clusters(d);
        REQUIRE(a.clusters.size() == 1);
        CHECK(a.clusters.at(1).members.size() == 20);
        CHECK(a.clusters.at(1).m() == 21);
    }

    SUBCASE("closer head wins and ties go to the lower index") {
        const auto a = assign_clusters(two_heads({{3, 0}, {5, 0}, {7, 1}}));
        CHECK(a.clusters.at(1).members == std::vector<int>{1, 2});
        CHECK(a.clusters.at(2).members == std::vector<int>{3});
    }

    SUBCASE("tie-break does not depend on head order") {
        Deployment d = two_heads({{5, 0}, {5, 3}});
        std::swap(d.heads[0], d.heads[1]);
        const auto a = assign_clusters(d);
        CHECK(a.clusters.at(1).members == std::vector<int>{1, 2});
    }

    SUBCASE("heads without members remain clusters of one") {
        const auto a = assign_clusters(two_heads({{1, 1}}));
        CHECK(a.clusters.at(2).members.empty());
        CHECK(a.clusters.at(2).m() == 1);
    }

    SUBCASE("no heads") {
        Deployment d;
        d.field = FieldSpec(10, 10);
        try {
            assign_clusters(d);
            FAIL("expected NoHeads");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NoHeads);
        }
    }
}

TEST_CASE("property: assignment is a nearest-head partition") {
    std::mt19937_64 gen(77);
    std::uniform_int_distribution<int> heads_n(1, 4), normals_n(0, 8);
    for (int trial = 0; trial < 300; ++trial) {
        Deployment d;
        d.field = FieldSpec(40, 40);
        const int h = heads_n(gen);
        d.normals = deploy_random_normals(d.field, normals_n(gen), gen());
        const auto hp = deploy_random_normals(d.field, h, gen());
        for (int k = 0; k < h; ++k) d.heads.push_back({{NodeKind::ClusterHead, k + 1}, hp[k].position});

        const auto a = assign_clusters(d);
        CHECK(a == assign_clusters(d));
        CHECK(a.clusters.size() == d.heads.size());

        std::multiset<int> seen;
        for (const auto& [head, c] : a.clusters) {
            for (int id : c.members) {
                seen.insert(id);
                // Brute-force equivalence (<= 12 nodes total).
                CHECK(oracle::nearest_head(d.find({NodeKind::Normal, id})->position, d.heads) == head);
                const double own = distance(d.find({NodeKind::Normal, id})->position,
                                            d.find({NodeKind::ClusterHead, head})->position);
                for (const auto& other : d.heads) {
                    CHECK(own <= distance(d.find({NodeKind::Normal, id})->position, other.position));
                }
            }
        }
        CHECK(seen.size() == d.normals.size());
        CHECK(std::set<int>(seen.begin(), seen.end()).size() == d.normals.size());
    }
}

TEST_CASE("cluster geometry") {
    SUBCASE("head on the tracing point") {
        const ClusterGeometry g({3, 4}, {3, 4}, {});
        CHECK(g.m() == 1);
        CHECK(g.tracing_to_head() == 0.0);
    }

    SUBCASE("circle of radius 5 around the tracing point") {
        std::vector<Position> members;
        for (int k = 1; k < 4; ++k) {
            const double a = 2.0 * std::numbers::pi * k / 4;
            members.push_back({5 * std::cos(a), 5 * std::sin(a)});
        }
        const ClusterGeometry g({0, 0}, {5, 0}, members);
        CHECK(g.tracing_to_head() == doctest::Approx(5.0));
        for (std::size_t i = 0; i < 3; ++i) CHECK(g.tracing_to_member(i) == doctest::Approx(5.0));
    }

    SUBCASE("corners of a 30 m square around its centre") {
        const ClusterGeometry g({15, 15}, {0, 0}, {{30, 0}, {0, 30}, {30, 30}});
        const double diag = 15.0 * std::sqrt(2.0);
        CHECK(g.tracing_to_head() == doctest::Approx(diag));
        for (std::size_t i = 0; i < 3; ++i) CHECK(g.tracing_to_member(i) == doctest::Approx(diag));
        CHECK(g.head_to_member(0) == doctest::Approx(30.0));
        CHECK(g.head_to_member(2) == doctest::Approx(30.0 * std::sqrt(2.0)));
        CHECK(g.member_to_member(0, 1) == doctest::Approx(30.0 * std::sqrt(2.0)));
        CHECK(g.member_to_member(0, 2) == doctest::Approx(30.0));
        CHECK(g.member_to_member(1, 1) == 0.0);
    }

    SUBCASE("from a deployment") {
        Deployment d = two_heads({{3, 0}, {4, 4}});
        d.tracing_points = {{1, {2, 0}}};
        const auto a = assign_clusters(d);
        const auto g = cluster_geometry(a.clusters.at(1), d, d.tracing_points[0]);
        CHECK(g.m() == 3);
        CHECK(g.tracing_to_head() == doctest::Approx(2.0));
        CHECK(g.head_to_member(0) == doctest::Approx(3.0));

        Cluster ghost{1, {9}};
        try {
            cluster_geometry(ghost, d, d.tracing_points[0]);
            FAIL("expected UnknownNode");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::UnknownNode);
        }
    }
}

TEST_CASE("property: geometry matrix is a metric") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(0.0, 30.0);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Position> members(7);
        for (auto& p : members) p = {u(gen), u(gen)};
        const ClusterGeometry g({u(gen), u(gen)}, {u(gen), u(gen)}, members);
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(g.member_to_member(i, i) == 0.0);
            for (std::size_t j = 0; j < 7; ++j) {
                CHECK(g.member_to_member(i, j) == g.member_to_member(j, i));
                for (std::size_t k = 0; k < 7; ++k) {
                    CHECK(g.member_to_member(i, k) <= g.member_to_member(i, j) + g.member_to_member(j, k) + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("assignment csv and diagnostics") {
    const Deployment d = two_heads({{3, 0}, {5, 0}, {7, 1}});
    const auto a = assign_clusters(d);
    std::ostringstream out;
    write_assignment_csv(out, a);
    CHECK(out.str() == "head_id,member_ids\nCH1,1;2\nCH2,3\n");

    const auto diag = membership_diagnostics(a, d, CorrelationParams(10, 1, 0.62));
    REQUIRE(diag.size() == 3);
    CHECK(diag[0].distance == doctest::Approx(3.0));
    CHECK(diag[0].correlation == doctest::Approx(std::exp(-0.3)));
    CHECK(diag[0].strongly_correlated);
    CHECK_FALSE(diag[1].strongly_correlated);  // exp(-0.5) < 0.62
}
