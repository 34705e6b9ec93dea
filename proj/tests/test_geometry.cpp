#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dhull/geometry.hpp"
#include "support/fixtures.hpp"
#include "support/random_gen.hpp"

using namespace dhull;

TEST_CASE("validate_polygon normalizes CCW input to clockwise") {
    auto P = validate_polygon({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
    CHECK(P.size() == 4);
    CHECK(P.perimeter == doctest::Approx(4.0));
    // Clockwise under y-up: signed area negative, i.e. second vertex is (0,1).
    CHECK(P.vertices[0].x == doctest::Approx(0.0));
    CHECK(P.vertices[1].y == doctest::Approx(1.0));
    CHECK(P.vertices[1].x == doctest::Approx(0.0));
}

TEST_CASE("validate_polygon rejects a bowtie") {
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {2, 2}, {2, 0}, {0, 2}}), NotSimpleError);
}

TEST_CASE("validate_polygon rejects degenerate input") {
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}}), DegenerateError);
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {1, 0}, {2, 0}}), DegenerateError);
    CHECK_THROWS_AS(validate_polygon({{0, 0}, {0, 0}, {1e-15, 0}}), DegenerateError);
}

TEST_CASE("validate_polygon merges duplicates and collinear runs") {
    auto P = validate_polygon({{0, 0}, {0, 0.5}, {0, 1}, {1, 1}, {1, 1}, {1, 0}});
    CHECK(P.size() == 4);
    CHECK(P.perimeter == doctest::Approx(4.0));
}

TEST_CASE("NOTCH fixture validates with L=18 and one lid") {
    auto P = fixtures::notch();
    CHECK(P.size() == 8);
    CHECK(P.perimeter == doctest::Approx(18.0));
    auto [hull, lids] = convex_hull_and_lids(P);
    CHECK(hull.size() == 4);
    REQUIRE(lids.size() == 1);
    CHECK(lids[0].a.x == doctest::Approx(1.5));
    CHECK(lids[0].a.y == doctest::Approx(4.0));
    CHECK(lids[0].b.x == doctest::Approx(2.5));
    CHECK(lids[0].b.y == doctest::Approx(4.0));
    CHECK(lids[0].chain.size() == 4); // four boundary vertices + implied lid edge
}

TEST_CASE("square hull equals the square, no lids") {
    auto P = fixtures::square();
    auto [hull, lids] = convex_hull_and_lids(P);
    CHECK(hull.size() == 4);
    CHECK(lids.empty());
}

TEST_CASE("arc_distance on the square") {
    auto P = fixtures::square();
    auto s0 = make_anchor_at_vertex(P, 0);         // (0,0)
    auto a = make_boundary_point(P, 3, 0.0, s0);   // (1,0)
    CHECK(arc_distance(P, s0, a) == doctest::Approx(3.0));
    CHECK(arc_distance(P, a, s0) == doctest::Approx(1.0));
    CHECK(arc_distance(P, a, a) == doctest::Approx(0.0));
}

TEST_CASE("order_compare anchored at different points") {
    auto P = fixtures::square();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto p01 = make_boundary_point(P, 1, 0.0, s0); // (0,1), arc 1
    auto p11 = make_boundary_point(P, 2, 0.0, s0); // (1,1), arc 2
    auto p10 = make_boundary_point(P, 3, 0.0, s0); // (1,0), arc 3
    CHECK(order_compare(P, s0, p01, p11) == Ordering::less);
    CHECK(order_compare(P, s0, s0, p10) == Ordering::less);

    // Re-anchor at (0,1): (1,1) has arc 1, (0,0) has arc 3.
    auto s1 = make_anchor_at_vertex(P, 1);
    CHECK(order_compare(P, s1, p11, s0) == Ordering::less);

    // Sentinel is the maximum.
    auto sent = make_sentinel(P, s0);
    CHECK(order_compare(P, s0, p10, sent) == Ordering::less);
    CHECK(order_compare(P, s0, sent, sent) == Ordering::equal);
}

TEST_CASE("point_at_arc inverts the parametrization") {
    auto P = fixtures::square();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto p = point_at_arc(P, s0, 1.5);
    CHECK(p.point.x == doctest::Approx(0.5));
    CHECK(p.point.y == doctest::Approx(1.0));
    auto q = point_at_arc(P, s0, 0.0);
    CHECK(q.point.x == doctest::Approx(0.0));
    CHECK(q.point.y == doctest::Approx(0.0));
    CHECK_THROWS_AS(point_at_arc(P, s0, 4.0), OutOfRangeError);
    CHECK_THROWS_AS(point_at_arc(P, s0, -0.1), OutOfRangeError);

    auto N = fixtures::notch();
    auto n0 = make_anchor_at_vertex(N, 0);
    auto r = point_at_arc(N, n0, 5.5);
    CHECK(r.point.x == doctest::Approx(1.5));
    CHECK(r.point.y == doctest::Approx(4.0));
}

TEST_CASE("star polygon has one lid per reflex gap") {
    auto P = testgen::star_gadget(8, 1.0);
    auto [hull, lids] = convex_hull_and_lids(P);
    CHECK(hull.size() == 8);
    CHECK(lids.size() == 8);
    for (const auto& lid : lids) {
        CHECK(on_hull(P, lid.a));
        CHECK(on_hull(P, lid.b));
    }
}

TEST_CASE("fuzz: order is total, arcs complementary, point_at_arc round-trips") {
    std::mt19937_64 rng(20240817);
    for (int iter = 0; iter < 40; ++iter) {
        auto P = testgen::random_simple_polygon(rng, 6 + iter % 12);
        const double L = P.perimeter;
        std::uniform_real_distribution<double> au(0.0, L * (1.0 - 1e-12));
        auto s0 = make_anchor_at_vertex(P, 0);
        for (int k = 0; k < 20; ++k) {
            auto a = point_at_arc(P, s0, au(rng));
            auto b = point_at_arc(P, s0, au(rng));
            // Complementarity.
            if (dist(a.point, b.point) > P.geom_tol()) {
                CHECK(arc_distance(P, a, b) + arc_distance(P, b, a) == doctest::Approx(L).epsilon(1e-9));
            }
            // Round trip.
            auto a2 = point_at_arc(P, s0, arc_distance(P, s0, a));
            CHECK(dist(a.point, a2.point) <= 1e-9 * L);
            // Total order consistency.
            auto c = point_at_arc(P, s0, au(rng));
            auto ord_ab = order_compare(P, s0, a, b);
            auto ord_ba = order_compare(P, s0, b, a);
            if (ord_ab == Ordering::less) CHECK(ord_ba == Ordering::greater);
            if (ord_ab == Ordering::equal) CHECK(ord_ba == Ordering::equal);
            if (ord_ab == Ordering::less && order_compare(P, s0, b, c) == Ordering::less)
                CHECK(order_compare(P, s0, a, c) == Ordering::less);
            CHECK(order_compare(P, s0, s0, a) != Ordering::greater);
        }
    }
}

TEST_CASE("fuzz: hull contains polygon, lid endpoints on hull") {
    std::mt19937_64 rng(7);
    for (int iter = 0; iter < 25; ++iter) {
        auto P = testgen::random_simple_polygon(rng, 8 + iter % 10);
        auto [hull, lids] = convex_hull_and_lids(P);
        REQUIRE(hull.size() >= 3);
        // cum_arc strictly increasing and closing back to the perimeter.
        for (std::size_t i = 0; i + 1 < P.size(); ++i) CHECK(P.cum_arc[i] < P.cum_arc[i + 1]);
        CHECK(P.cum_arc.back() + P.edge_lengths.back() == doctest::Approx(P.perimeter));
        // Hull area >= polygon area.
        auto area = [](const std::vector<Point2>& v) {
            double s = 0;
            for (std::size_t i = 0; i < v.size(); ++i) {
                auto a = v[i], b = v[(i + 1) % v.size()];
                s += a.x * b.y - b.x * a.y;
            }
            return std::abs(0.5 * s);
        };
        CHECK(area(hull) >= area(P.vertices) - 1e-9);
        double pocket_arcs = 0.0;
        double hull_coincident = 0.0;
        for (const auto& lid : lids) {
            CHECK(on_hull(P, lid.a));
            CHECK(on_hull(P, lid.b));
            // Pocket interior vertices stay off the hull.
            for (std::size_t j = 1; j + 1 < lid.chain.size(); ++j)
                CHECK(!on_hull(P, P.vertices[lid.chain[j]]));
            for (std::size_t j = 0; j + 1 < lid.chain.size(); ++j)
                pocket_arcs += P.edge_lengths[lid.chain[j]];
        }
        // Pockets plus hull-coincident arcs partition the boundary.
        for (std::size_t e = 0; e < P.size(); ++e) {
            const Point2 mid = P.edge_point(e, 0.5);
            if (on_hull(P, mid)) hull_coincident += P.edge_lengths[e];
        }
        CHECK(pocket_arcs + hull_coincident == doctest::Approx(P.perimeter).epsilon(1e-9));
    }
}
