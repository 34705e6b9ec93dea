#pragma once

#include <vector>

#include "dhull/geometry.hpp"

namespace dhull {

/// Absolute slack used when comparing path lengths against the flight range.
constexpr double kReachEps = 1e-9;

enum class LegKind { boundary, bridge };

struct PathLeg {
    LegKind kind = LegKind::boundary;
    Point2 from;
    Point2 to;
    double length = 0.0;
};

/// A clockwise d-path: contiguous legs, each a boundary segment or an
/// exterior chord of length <= d, with boundary contacts in increasing order.
struct DPath {
    BoundaryPoint from;
    BoundaryPoint to;
    std::vector<PathLeg> legs;
    double total_length = 0.0;
};

/// True iff the open segment ab avoids Int(P). Boundary overlap is allowed:
/// drones may fly over the boundary itself.
bool segment_over_water(const Polygon& P, Point2 a, Point2 b);

/// True iff the open segment ab lies strictly in Ext(P): no point of it is
/// on P or in Int(P). Endpoints are expected on the boundary.
bool segment_strictly_exterior(const Polygon& P, Point2 a, Point2 b);

/// True iff ab is a d-bridge: open segment strictly exterior and |ab| <= d.
bool is_d_bridge(const Polygon& P, Point2 a, Point2 b, double d);

/// Shortest clockwise d-path from a to b (b may be the sentinel). Always
/// exists; the boundary interval [a, b] itself is a valid d-path.
DPath shortest_d_path(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d);

/// True iff a drone with range d can fly from a to b in one hop:
/// shortest_d_path(a, b).total_length <= d.
bool drone_reachable(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                     double d);

namespace detail {

/// The loop made of the chord a->b plus the reversed boundary interval [a,b]
/// must not wind counterclockwise: a clockwise flyover caps the interval it
/// skips from the water side. Rejects out-and-back shortcuts over open water.
bool chord_caps_forward(const Polygon& P, Point2 a, double abs_a, Point2 b, double abs_b);

/// Clockwise admissibility of a flight chord from a (at absolute boundary
/// arc abs_a) to b: over water, every boundary contact along the flight
/// advances clockwise within [a, b], and the chord caps its interval
/// forward. Rejects wrong-way shortcuts that run backwards along an edge.
bool chord_admissible(const Polygon& P, Point2 a, double abs_a, Point2 b, double abs_b);

/// Directed visibility graph over {a} + polygon vertices in the clockwise
/// interval (a, b) + {b}, with per-node shortest capped-geodesic distances
/// from a. Node arcs are measured from a.
struct VisGraph {
    std::vector<BoundaryPoint> nodes; // arc field is clockwise arc from a
    std::vector<double> dist;
    std::vector<int> parent;
};

VisGraph vis_dijkstra(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d);

} // namespace detail

} // namespace dhull
