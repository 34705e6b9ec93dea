#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dhull/oracle.hpp"
#include "support/fixtures.hpp"

using namespace dhull;

TEST_CASE("brute_geodesic hand values") {
    auto P = fixtures::notch();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto a = make_boundary_point(P, 1, 0.0, s0); // (0,4)
    auto b = make_boundary_point(P, 6, 0.0, s0); // (4,4)
    CHECK(oracle::brute_geodesic(P, a, b, 1.0, 0.25) == doctest::Approx(4.0).epsilon(1e-12));

    auto SQ = fixtures::square();
    auto q0 = make_anchor_at_vertex(SQ, 0);
    auto q = make_boundary_point(SQ, 2, 0.0, q0);
    CHECK(oracle::brute_geodesic(SQ, q0, q, 2.0, 0.25) == doctest::Approx(2.0));
    CHECK(oracle::brute_geodesic(SQ, q0, q0, 2.0, 0.25) == doctest::Approx(0.0));
}

TEST_CASE("brute_geodesic refines monotonically in pitch") {
    auto P = fixtures::notch();
    auto s0 = make_anchor_at_vertex(P, 0);
    auto a = make_boundary_point(P, 1, 0.0, s0);
    auto b = make_boundary_point(P, 6, 0.0, s0);
    double prev = 1e300;
    for (double h : {2.0, 1.0, 0.5, 0.25}) {
        const double v = oracle::brute_geodesic(P, a, b, 1.0, h);
        CHECK(v <= prev + 1e-9);
        prev = v;
    }
}

namespace {

std::vector<BoundaryPoint> uniform_chain(const Polygon& P, double eps) {
    auto s0 = make_anchor_at_vertex(P, 0);
    std::vector<BoundaryPoint> X;
    // vertices plus per-edge equal subdivision at pitch <= eps
    for (std::size_t e = 0; e < P.size(); ++e) {
        const double len = P.edge_lengths[e];
        const auto pieces = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::ceil(len / eps - 1e-12)));
        for (std::size_t j = 0; j < pieces; ++j)
            X.push_back(make_boundary_point(P, e, static_cast<double>(j) / pieces, s0));
    }
    std::sort(X.begin(), X.end(),
              [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.arc < b.arc; });
    X.push_back(make_sentinel(P, s0));
    return X;
}

} // namespace

TEST_CASE("brute_min_cycle on fixtures") {
    auto SQ = fixtures::square();
    CHECK(oracle::brute_min_cycle(SQ, uniform_chain(SQ, 0.5), 1.5) == 3);
    CHECK(oracle::brute_min_cycle(SQ, uniform_chain(SQ, 0.5), 5.0) == 1);
    auto P = fixtures::notch();
    CHECK(oracle::brute_min_cycle(P, uniform_chain(P, 0.5), 4.0) == 4);
}

TEST_CASE("brute_enclosure accepts the hull-corner cycle, rejects back-and-forth") {
    auto P = fixtures::notch();
    // d=4 solution: hull corners, with the top hop following the rim + lid.
    std::vector<Point2> cycle{{0, 0}, {0, 4}, {1.5, 4}, {2.5, 4}, {4, 4}, {4, 0}};
    CHECK(oracle::brute_enclosure(P, cycle));

    auto SQ = fixtures::square();
    // Degenerate back-and-forth "cycle" along the bottom edge: winding 0.
    std::vector<Point2> bad{{0, 0}, {1, 0}};
    CHECK(!oracle::brute_enclosure(SQ, bad));

    std::vector<Point2> good{{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    CHECK(oracle::brute_enclosure(SQ, good));
}
