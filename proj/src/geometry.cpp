#include "dhull/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dhull {

double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double norm(Point2 a) { return std::hypot(a.x, a.y); }
double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double orient_area(Point2 a, Point2 b, Point2 c) {
    return cross(b - a, c - a);
}

namespace {

double bbox_diag(const std::vector<Point2>& pts) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    if (pts.empty()) return 1.0;
    return std::max(std::hypot(xmax - xmin, ymax - ymin), 1e-300);
}

double shoelace(const std::vector<Point2>& v) {
    double s = 0.0;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = v[i];
        const Point2& b = v[(i + 1) % n];
        s += a.x * b.y - b.x * a.y;
    }
    return 0.5 * s;
}

} // namespace

namespace detail {

double point_segment_distance(Point2 q, Point2 a, Point2 b) {
    const Point2 ab = b - a;
    const double len2 = dot(ab, ab);
    if (len2 <= 0.0) return dist(q, a);
    double t = dot(q - a, ab) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return dist(q, a + ab * t);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d, double tol) {
    const double d1 = orient_area(c, d, a);
    const double d2 = orient_area(c, d, b);
    const double d3 = orient_area(a, b, c);
    const double d4 = orient_area(a, b, d);

    if (((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) &&
        ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol)))
        return true;

    // Near-collinear / endpoint-touching cases, with distance tolerance.
    const double close = std::sqrt(tol);
    if (std::abs(d1) <= tol && point_segment_distance(a, c, d) <= close) return true;
    if (std::abs(d2) <= tol && point_segment_distance(b, c, d) <= close) return true;
    if (std::abs(d3) <= tol && point_segment_distance(c, a, b) <= close) return true;
    if (std::abs(d4) <= tol && point_segment_distance(d, a, b) <= close) return true;
    return false;
}

std::vector<Point2> convex_hull_points(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(), [](Point2 a, Point2 b) {
                  return a.x == b.x && a.y == b.y;
              }),
              pts.end());
    const std::size_t n = pts.size();
    if (n < 3) return pts;

    const double tol = 1e-12 * bbox_diag(pts) * bbox_diag(pts);
    std::vector<Point2> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {             // lower hull (CCW)
        while (k >= 2 && orient_area(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) { // upper hull
        while (k >= t && orient_area(h[k - 2], h[k - 1], pts[i]) <= tol) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    std::reverse(h.begin(), h.end()); // clockwise
    return h;
}

} // namespace detail

Point2 Polygon::edge_point(std::size_t e, double t) const {
    const Point2 a = edge_start(e);
    const Point2 b = edge_end(e);
    return a + (b - a) * t;
}

double Polygon::abs_arc(std::size_t edge, double t) const {
    double a = cum_arc[edge] + t * edge_lengths[edge];
    if (a >= perimeter) a -= perimeter;
    return a;
}

double Polygon::geom_tol() const { return 1e-9 * bbox_diag(vertices); }

PointLocation Polygon::locate(Point2 q) const {
    const double tol = geom_tol();
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::point_segment_distance(q, edge_start(i), edge_end(i)) <= tol)
            return PointLocation::boundary;
    }
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = edge_start(i);
        const Point2 b = edge_end(i);
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xint = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (q.x < xint) inside = !inside;
        }
    }
    return inside ? PointLocation::interior : PointLocation::exterior;
}

bool Polygon::project_to_boundary(Point2 q, std::size_t& edge, double& t) const {
    const double tol = geom_tol();
    const std::size_t n = vertices.size();
    double best = std::numeric_limits<double>::infinity();
    std::size_t best_e = 0;
    double best_t = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = edge_start(i);
        const Point2 b = edge_end(i);
        const Point2 ab = b - a;
        double ti = dot(q - a, ab) / dot(ab, ab);
        ti = std::clamp(ti, 0.0, 1.0);
        const double di = dist(q, a + ab * ti);
        if (di < best) {
            best = di;
            best_e = i;
            best_t = ti;
        }
    }
    if (best > tol) return false;
    if (best_t >= 1.0 - 1e-12) { // canonicalize vertex hits to the next edge
        best_e = (best_e + 1) % n;
        best_t = 0.0;
    }
    edge = best_e;
    t = best_t;
    return true;
}

Polygon validate_polygon(const std::vector<Point2>& raw_vertices) {
    for (const auto& p : raw_vertices) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw DegenerateError("non-finite vertex coordinate");
    }
    if (raw_vertices.size() < 3) throw DegenerateError("fewer than 3 vertices");

    const double diag = bbox_diag(raw_vertices);
    const double merge_tol = 1e-9 * diag;
    const double area_tol = 1e-12 * diag * diag;

    // Merge duplicate consecutive vertices (including the wraparound pair).
    std::vector<Point2> v;
    for (const auto& p : raw_vertices) {
        if (v.empty() || dist(v.back(), p) > merge_tol) v.push_back(p);
    }
    while (v.size() > 1 && dist(v.front(), v.back()) <= merge_tol) v.pop_back();
    if (v.size() < 3) throw DegenerateError("fewer than 3 distinct vertices");

    // All vertices on one line: zero area.
    {
        std::size_t far_i = 0;
        double far_d = -1.0;
        for (std::size_t i = 1; i < v.size(); ++i) {
            const double d = dist(v[0], v[i]);
            if (d > far_d) {
                far_d = d;
                far_i = i;
            }
        }
        bool collinear = true;
        for (const auto& p : v)
            if (detail::point_segment_distance(p, v[0], v[far_i]) > merge_tol &&
                std::abs(orient_area(v[0], v[far_i], p)) > area_tol)
                collinear = false;
        if (collinear) throw DegenerateError("zero area");
    }

    // Merge collinear consecutive vertices; a collinear backtrack is a spike.
    bool changed = true;
    while (changed && v.size() >= 3) {
        changed = false;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const std::size_t n = v.size();
            const Point2 prev = v[(i + n - 1) % n];
            const Point2 cur = v[i];
            const Point2 next = v[(i + 1) % n];
            if (std::abs(orient_area(prev, cur, next)) <= area_tol) {
                if (dot(prev - cur, next - cur) > 0.0)
                    throw NotSimpleError("zero-width spike at a vertex");
                v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    if (v.size() < 3) throw DegenerateError("polygon collapses to a segment");

    // Simplicity: no two non-consecutive edges may touch.
    const std::size_t n = v.size();
    const double xtol = 1e-12 * diag * diag;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
            if (detail::segments_intersect(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], xtol))
                throw NotSimpleError("non-consecutive edges intersect");
        }
    }

    const double area = shoelace(v);
    if (std::abs(area) <= area_tol * 1e3) throw DegenerateError("zero area");
    if (area > 0.0) std::reverse(v.begin() + 1, v.end()); // normalize to clockwise

    Polygon P;
    P.vertices = v;
    P.edge_lengths.resize(n);
    P.cum_arc.resize(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        P.cum_arc[i] = acc;
        P.edge_lengths[i] = dist(v[i], v[(i + 1) % n]);
        acc += P.edge_lengths[i];
    }
    P.perimeter = acc;

    // Strict hull corners as polygon vertex indices, clockwise starting from
    // the polygon vertex order.
    const std::vector<Point2> hull_pts = detail::convex_hull_points(v);
    const double tol = P.geom_tol();
    std::vector<std::size_t> hull_idx;
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& h : hull_pts) {
            if (dist(v[i], h) <= tol) {
                hull_idx.push_back(i);
                break;
            }
        }
    }
    P.hull = hull_idx;

    // Contact chain: polygon vertices lying on the hull boundary, in polygon
    // order. Consecutive contacts whose boundary arc exceeds the straight
    // chord seal a pocket; the chord is the lid.
    const std::size_t m = hull_pts.size();
    std::vector<std::size_t> contacts;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t h = 0; h < m; ++h) {
            if (detail::point_segment_distance(v[i], hull_pts[h], hull_pts[(h + 1) % m]) <= tol) {
                contacts.push_back(i);
                break;
            }
        }
    }
    for (std::size_t c = 0; c < contacts.size(); ++c) {
        const std::size_t ia = contacts[c];
        const std::size_t ib = contacts[(c + 1) % contacts.size()];
        double arc = P.cum_arc[ib] - P.cum_arc[ia];
        if (arc <= 0.0) arc += P.perimeter;
        const double chord = dist(v[ia], v[ib]);
        if (arc > chord + tol) {
            Lid lid;
            lid.a = v[ia];
            lid.b = v[ib];
            lid.a_vertex = ia;
            lid.b_vertex = ib;
            for (std::size_t k = ia;; k = (k + 1) % n) {
                lid.chain.push_back(k);
                lid.pocket.push_back(v[k]);
                if (k == ib) break;
            }
            P.lids.push_back(std::move(lid));
        }
    }
    return P;
}

BoundaryPoint make_anchor(const Polygon& P, std::size_t edge, double t) {
    BoundaryPoint p;
    p.edge = edge;
    p.t = t;
    p.arc = 0.0;
    p.point = P.edge_point(edge, t);
    return p;
}

BoundaryPoint make_anchor_at_vertex(const Polygon& P, std::size_t vertex) {
    return make_anchor(P, vertex % P.size(), 0.0);
}

BoundaryPoint make_boundary_point(const Polygon& P, std::size_t edge, double t,
                                  const BoundaryPoint& s0) {
    BoundaryPoint p;
    p.edge = edge;
    p.t = t;
    double rel = P.abs_arc(edge, t) - P.abs_arc(s0.edge, s0.t);
    if (rel < 0.0) rel += P.perimeter;
    p.arc = rel;
    p.point = P.edge_point(edge, t);
    return p;
}

BoundaryPoint make_sentinel(const Polygon& P, const BoundaryPoint& s0) {
    BoundaryPoint p = s0;
    p.arc = P.perimeter;
    return p;
}

bool is_sentinel(const Polygon& P, const BoundaryPoint& p) {
    return p.arc >= P.perimeter * (1.0 - 1e-9);
}

double arc_distance(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b) {
    double d = P.abs_arc(b.edge, b.t) - P.abs_arc(a.edge, a.t);
    if (d < 0.0) d += P.perimeter;
    return d;
}

Ordering order_compare(const Polygon& P, const BoundaryPoint& s0,
                       const BoundaryPoint& a, const BoundaryPoint& b) {
    const double tol = 1e-9 * P.perimeter;
    auto rel = [&](const BoundaryPoint& p) {
        if (is_sentinel(P, p) && dist(p.point, s0.point) <= P.geom_tol())
            return P.perimeter;
        double r = P.abs_arc(p.edge, p.t) - P.abs_arc(s0.edge, s0.t);
        if (r < 0.0) r += P.perimeter;
        return r;
    };
    const double ra = rel(a);
    const double rb = rel(b);
    if (std::abs(ra - rb) <= tol) return Ordering::equal;
    return ra < rb ? Ordering::less : Ordering::greater;
}

BoundaryPoint point_at_arc(const Polygon& P, const BoundaryPoint& s0, double arc) {
    if (!(arc >= 0.0) || arc >= P.perimeter)
        throw OutOfRangeError("arc outside [0, perimeter)");
    double a = P.abs_arc(s0.edge, s0.t) + arc;
    if (a >= P.perimeter) a -= P.perimeter;
    // Find the edge containing absolute arc `a`.
    const std::size_t n = P.size();
    std::size_t e = static_cast<std::size_t>(
        std::upper_bound(P.cum_arc.begin(), P.cum_arc.end(), a) - P.cum_arc.begin());
    e = (e == 0) ? 0 : e - 1;
    double t = (a - P.cum_arc[e]) / P.edge_lengths[e];
    if (t >= 1.0 - 1e-12) { // canonicalize to the next edge start
        e = (e + 1) % n;
        t = 0.0;
    }
    BoundaryPoint p;
    p.edge = e;
    p.t = t;
    p.arc = arc;
    p.point = P.edge_point(e, t);
    return p;
}

std::pair<std::vector<Point2>, std::vector<Lid>> convex_hull_and_lids(const Polygon& P) {
    std::vector<Point2> hull_pts;
    hull_pts.reserve(P.hull.size());
    for (std::size_t i : P.hull) hull_pts.push_back(P.vertices[i]);
    return {hull_pts, P.lids};
}

bool on_hull(const Polygon& P, Point2 q) {
    const double tol = P.geom_tol();
    const std::size_t m = P.hull.size();
    for (std::size_t h = 0; h < m; ++h) {
        const Point2 a = P.vertices[P.hull[h]];
        const Point2 b = P.vertices[P.hull[(h + 1) % m]];
        if (detail::point_segment_distance(q, a, b) <= tol) return true;
    }
    return false;
}

} // namespace dhull
