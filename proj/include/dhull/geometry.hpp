#pragma once

#include <cstddef>
#include <vector>

#include "dhull/errors.hpp"

namespace dhull {

struct Point2 {
    double x = 0.0;
    double y = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }

double dot(Point2 a, Point2 b);
double cross(Point2 a, Point2 b);
double norm(Point2 a);
double dist(Point2 a, Point2 b);

/// Signed area of the triangle abc; positive when c lies left of a->b (y-up).
double orient_area(Point2 a, Point2 b, Point2 c);

enum class PointLocation { interior, boundary, exterior };

struct BoundaryPoint;
struct Lid;

/// Simple polygon stored in clockwise vertex order with precomputed arc
/// parametrization, convex hull and lid/pocket decomposition.
///
/// Vertex i spans edge i from vertices[i] to vertices[(i+1) % n]; a boundary
/// point at a vertex is canonicalized to (edge = i, t = 0).
struct Polygon {
    std::vector<Point2> vertices;
    std::vector<double> edge_lengths;
    std::vector<double> cum_arc;        // cum_arc[i] = arc from vertex 0 to vertex i
    double perimeter = 0.0;
    std::vector<std::size_t> hull;      // strict hull corners, clockwise, polygon vertex indices
    std::vector<Lid> lids;

    std::size_t size() const { return vertices.size(); }
    Point2 vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
    Point2 edge_start(std::size_t e) const { return vertices[e]; }
    Point2 edge_end(std::size_t e) const { return vertices[(e + 1) % vertices.size()]; }
    Point2 edge_point(std::size_t e, double t) const;

    /// Arc length from vertex 0 to the point (edge, t), in [0, perimeter).
    double abs_arc(std::size_t edge, double t) const;

    /// Tolerance for incidence predicates: 1e-9 * bounding-box diagonal.
    double geom_tol() const;

    /// Locate q relative to the closed region bounded by the polygon.
    PointLocation locate(Point2 q) const;

    /// True when q lies on the boundary within geom_tol(); fills edge/t.
    bool project_to_boundary(Point2 q, std::size_t& edge, double& t) const;
};

/// A point on the polygon boundary, ordered by clockwise arc from an anchor
/// s0. The anchor itself has arc 0; the sentinel copy of the anchor has
/// arc = perimeter and compares greatest.
struct BoundaryPoint {
    std::size_t edge = 0;
    double t = 0.0;       // parameter in [0,1] along the directed edge
    double arc = 0.0;     // clockwise arc from the anchor, in [0, L]; L marks the sentinel
    Point2 point;
};

/// Clockwise interval [from, to] on the boundary.
struct Interval {
    BoundaryPoint from;
    BoundaryPoint to;
};

/// A convex-hull segment not on the polygon, together with the pocket it
/// seals: the clockwise boundary chain between its endpoints.
struct Lid {
    Point2 a;
    Point2 b;
    std::size_t a_vertex = 0;               // polygon vertex index of a
    std::size_t b_vertex = 0;               // polygon vertex index of b
    std::vector<std::size_t> chain;         // vertices a..b along the pocket, clockwise
    std::vector<Point2> pocket;             // chain vertices + closing lid edge b->a
};

enum class Ordering { less, equal, greater };

/// Validate and normalize raw input vertices into a Polygon.
///
/// Duplicate and collinear consecutive vertices are merged, orientation is
/// normalized to clockwise, simplicity is checked, and the hull/lid/pocket
/// decomposition is precomputed.
///
/// Throws DegenerateError (< 3 distinct vertices or zero area) or
/// NotSimpleError (non-consecutive edges intersect).
Polygon validate_polygon(const std::vector<Point2>& raw_vertices);

/// Anchor a boundary point at (edge, t): arc is 0, i.e. this point is s0.
BoundaryPoint make_anchor(const Polygon& P, std::size_t edge, double t);
BoundaryPoint make_anchor_at_vertex(const Polygon& P, std::size_t vertex);

/// Boundary point at (edge, t) with arc measured clockwise from s0.
BoundaryPoint make_boundary_point(const Polygon& P, std::size_t edge, double t,
                                  const BoundaryPoint& s0);

/// The sentinel copy of the anchor: same position, arc = perimeter.
BoundaryPoint make_sentinel(const Polygon& P, const BoundaryPoint& s0);

bool is_sentinel(const Polygon& P, const BoundaryPoint& p);

/// Clockwise boundary length from a to b (independent of the anchor).
double arc_distance(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b);

/// Compare a and b under the total order anchored at s0.
Ordering order_compare(const Polygon& P, const BoundaryPoint& s0,
                       const BoundaryPoint& a, const BoundaryPoint& b);

/// The unique boundary point at clockwise arc distance `arc` from s0.
/// Requires 0 <= arc < perimeter; throws OutOfRangeError otherwise.
BoundaryPoint point_at_arc(const Polygon& P, const BoundaryPoint& s0, double arc);

/// Hull corner points (clockwise) and the lids with their pockets.
std::pair<std::vector<Point2>, std::vector<Lid>> convex_hull_and_lids(const Polygon& P);

/// True when q lies on the convex hull boundary within geom_tol().
bool on_hull(const Polygon& P, Point2 q);

namespace detail {

/// Convex hull of a point set, clockwise, collinear points dropped.
std::vector<Point2> convex_hull_points(std::vector<Point2> pts);

/// Proper or improper intersection test for closed segments ab and cd.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, double tol);

/// Distance from q to the segment ab.
double point_segment_distance(Point2 q, Point2 a, Point2 b);

} // namespace detail

} // namespace dhull
