#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhull/appsol.hpp"
#include "dhull/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace dhull;

TEST_CASE("discretize: counts and spacing") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);

    auto X = discretize(SQ, s0, 0.5);
    CHECK(X.points.size() == 8);
    for (std::size_t i = 0; i < X.points.size(); ++i)
        CHECK(X.points[i].arc == doctest::Approx(0.5 * i));

    auto coarse = discretize(SQ, s0, 4.0);
    CHECK(coarse.points.size() == 4); // vertices only

    auto P = fixtures::notch();
    auto n0 = make_anchor_at_vertex(P, 0);
    auto XN = discretize(P, n0, 0.5);
    CHECK(XN.points.size() == 36);
    for (std::size_t i = 0; i + 1 < XN.points.size(); ++i)
        CHECK(XN.points[i + 1].arc - XN.points[i].arc <= 0.5 + 1e-12);
    // All polygon vertices present.
    for (std::size_t v = 0; v < P.size(); ++v) {
        bool found = false;
        for (const auto& x : XN.points)
            if (dist(x.point, P.vertices[v]) <= 1e-12) found = true;
        CHECK(found);
    }

    CHECK_THROWS_AS(discretize(SQ, s0, 0.0), EpsilonNonPositiveError);
}

TEST_CASE("discretize: mid-edge start becomes a grid point") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor(SQ, 0, 0.3);
    auto X = discretize(SQ, s0, 0.5);
    CHECK(X.points[0].arc == doctest::Approx(0.0));
    CHECK(dist(X.points[0].point, s0.point) <= 1e-12);
    for (std::size_t i = 0; i + 1 < X.points.size(); ++i)
        CHECK(X.points[i + 1].arc - X.points[i].arc <= 0.5 + 1e-12);
}

TEST_CASE("reach graph on the square: no E2, pure arc adjacency") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);
    auto X = discretize(SQ, s0, 0.5);
    auto G = build_reach_graph(SQ, X, 1.5);

    for (std::size_t i = 0; i < G.H.adj.size(); ++i)
        for (const auto& e : G.H.adj[i]) CHECK(!e.bridge); // E2 must be empty

    const std::size_t m = X.points.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j <= m; ++j) {
            const double arc_j = (j == m) ? 4.0 : X.points[j].arc;
            const bool expect = (arc_j - X.points[i].arc) <= 1.5 + 1e-9;
            CHECK(G.adjacent(i, j) == expect);
        }
    }
}

TEST_CASE("reach graph on the notch contains the lid bridge") {
    auto P = fixtures::notch();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto X = discretize(P, s0, 0.5);
    auto G = build_reach_graph(P, X, 1.0);

    // Find the E2 edge (1.5,4) -> (2.5,4) with weight 1.
    bool found = false;
    for (std::size_t i = 0; i < G.H.adj.size(); ++i) {
        for (const auto& e : G.H.adj[i]) {
            if (!e.bridge) continue;
            const Point2 a = X.points[i].point;
            const Point2 b = (e.to < X.points.size()) ? X.points[e.to].point : X.sentinel.point;
            if (dist(a, {1.5, 4}) <= 1e-12 && dist(b, {2.5, 4}) <= 1e-12) {
                found = true;
                CHECK(e.weight == doctest::Approx(1.0));
            }
        }
    }
    CHECK(found);

    // The reach set of (1.5,4) includes (2.5,4).
    std::size_t i_lid = 0, j_lid = 0;
    for (std::size_t i = 0; i < X.points.size(); ++i) {
        if (dist(X.points[i].point, {1.5, 4}) <= 1e-12) i_lid = i;
        if (dist(X.points[i].point, {2.5, 4}) <= 1e-12) j_lid = i;
    }
    CHECK(G.adjacent(i_lid, j_lid));
}

TEST_CASE("everything adjacent to the sentinel at huge range") {
    auto P = fixtures::notch();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto X = discretize(P, s0, 2.0);
    auto G = build_reach_graph(P, X, 2.0 * P.perimeter);
    for (std::size_t i = 0; i < X.points.size(); ++i) CHECK(G.adjacent(i, G.node_count - 1));
}

TEST_CASE("shortest_cycle station counts") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);
    auto X = discretize(SQ, s0, 0.5);
    CHECK(shortest_cycle(build_reach_graph(SQ, X, 1.5)).size() == 3);
    CHECK(shortest_cycle(build_reach_graph(SQ, X, 5.0)).size() == 1);

    auto P = fixtures::notch();
    auto n0 = make_anchor_at_vertex(P, 0);
    auto XN = discretize(P, n0, 0.5);
    CHECK(shortest_cycle(build_reach_graph(P, XN, 4.0)).size() == 4);

    CHECK_THROWS_AS(shortest_cycle(build_reach_graph(SQ, X, 0.2)), DisconnectedError);
}

TEST_CASE("run_appsol fixtures and station validity") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);
    auto sol = run_appsol(SQ, s0, 1.5, 0.5);
    CHECK(sol.k == 3);
    for (const auto& hop : sol.hops) CHECK(hop.total_length <= 1.5 + 1e-9);
    CHECK(oracle::brute_enclosure(SQ, sol.cycle_polyline()));

    auto P = fixtures::notch();
    auto n0 = make_anchor_at_vertex(P, 0);
    auto nsol = run_appsol(P, n0, 4.0, 0.5);
    CHECK(nsol.k == 4);
    CHECK(oracle::brute_enclosure(P, nsol.cycle_polyline()));

    // Coarse grid (vertices only): spec's own grid {0,1,2,3} forces k=4, in
    // agreement with the brute cycle oracle.
    auto coarse = run_appsol(SQ, s0, 1.5, 1.5);
    auto Xc = discretize(SQ, s0, 1.5);
    auto chain = Xc.points;
    chain.push_back(Xc.sentinel);
    CHECK(coarse.k == oracle::brute_min_cycle(SQ, chain, 1.5));
    CHECK(coarse.k == 4);
}

TEST_CASE("run_appsol2 on fixtures") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);
    CHECK(run_appsol2(SQ, s0, 1.5, 0.5).k == 3);

    auto P = fixtures::notch();
    auto n0 = make_anchor_at_vertex(P, 0);
    auto nsol = run_appsol2(P, n0, 4.0, 0.5);
    CHECK(nsol.k == 4);
    CHECK(oracle::brute_enclosure(P, nsol.cycle_polyline()));

    CHECK(run_appsol2(SQ, s0, 5.0, 0.5).k == 1);
}

TEST_CASE("E2 strictness: no same-boundary shortcuts on the square") {
    auto SQ = fixtures::square();
    auto s0 = make_anchor_at_vertex(SQ, 0);
    auto X = discretize(SQ, s0, 0.25);
    auto G = build_reach_graph(SQ, X, 3.0);
    for (std::size_t i = 0; i < G.H.adj.size(); ++i)
        for (const auto& e : G.H.adj[i]) CHECK(!e.bridge);
}

TEST_CASE("H-path lengths match the brute geodesic") {
    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 8; ++iter) {
        auto P = testgen::random_simple_polygon(rng, 6 + iter);
        auto s0 = make_anchor_at_vertex(P, P.hull[0]);
        const double eps = P.perimeter / 24.0;
        const double d = P.perimeter * 0.35;
        auto X = discretize(P, s0, eps);
        auto G = build_reach_graph(P, X, d);

        // Forward sweep over H from each sampled source; in the coincidence
        // regime (H-distance within d) the value must equal the true
        // geodesic, which the dense oracle reproduces to 1e-9.
        std::uniform_int_distribution<std::size_t> pick(0, X.points.size() - 1);
        for (int k = 0; k < 10; ++k) {
            const std::size_t i = pick(rng);
            std::vector<double> dist_row(G.node_count,
                                         std::numeric_limits<double>::infinity());
            dist_row[i] = 0.0;
            for (std::size_t u = i; u < G.node_count; ++u) {
                if (dist_row[u] == std::numeric_limits<double>::infinity()) continue;
                for (const auto& e : G.H.adj[u])
                    dist_row[e.to] = std::min(dist_row[e.to], dist_row[u] + e.weight);
            }
            for (int probe = 0; probe < 4; ++probe) {
                const std::size_t j = pick(rng);
                if (j <= i || j >= X.points.size()) continue;
                if (dist_row[j] > d) continue;
                const double ref = oracle::brute_geodesic(P, X.points[i], X.points[j], d,
                                                          P.perimeter / 160.0);
                CHECK(dist_row[j] == doctest::Approx(ref).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("monotonicity: k non-increasing in d; appsol2 <= appsol") {
    std::mt19937_64 rng(909);
    for (int iter = 0; iter < 6; ++iter) {
        auto P = testgen::random_simple_polygon(rng, 6 + iter);
        auto s0 = make_anchor_at_vertex(P, P.hull[0]);
        const double eps = P.perimeter / 20.0;
        std::size_t prev = static_cast<std::size_t>(-1);
        for (double f : {0.15, 0.25, 0.4, 0.6}) {
            const double d = f * P.perimeter;
            const auto k = run_appsol(P, s0, d, eps).k;
            CHECK(k <= prev);
            CHECK(run_appsol2(P, s0, d, eps).k <= k);
            prev = k;
        }
    }
}
