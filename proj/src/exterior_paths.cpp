#include "dhull/exterior_paths.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace dhull {

namespace {

struct BoundaryContact {
    double param = 0.0;   // position along the flight segment, in [0,1]
    double abs_arc = 0.0; // boundary arc of the touched point
};

/// Boundary contacts of segment pq: crossing/graze points plus both ends of
/// every collinear overlap, with the boundary arc of each contact.
void gather_contacts(const Polygon& P, Point2 p, Point2 q,
                     std::vector<BoundaryContact>& out) {
    const Point2 r = q - p;
    const double rlen = norm(r);
    const double tol = P.geom_tol();
    const double ctol = tol * std::max(rlen, 1.0);
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 c = P.edge_start(i);
        const Point2 d = P.edge_end(i);
        const Point2 s = d - c;
        const double denom = cross(r, s);
        const Point2 cp = c - p;
        if (std::abs(denom) > ctol) {
            const double t = cross(cp, s) / denom;
            const double u = cross(cp, r) / denom;
            if (t > -1e-12 && t < 1.0 + 1e-12 && u > -1e-12 && u < 1.0 + 1e-12)
                out.push_back({std::clamp(t, 0.0, 1.0),
                               P.cum_arc[i] + std::clamp(u, 0.0, 1.0) * P.edge_lengths[i]});
        } else if (std::abs(cross(cp, r)) <= ctol) {
            const double l2 = rlen * rlen;
            if (l2 <= 0.0) continue;
            double tc = dot(cp, r) / l2;
            double td = dot(d - p, r) / l2;
            double uc = 0.0, ud = 1.0;
            if (tc > td) {
                std::swap(tc, td);
                std::swap(uc, ud);
            }
            if (td > 0.0 && tc < 1.0) {
                const double span_t = td - tc;
                const double t0 = std::max(tc, 0.0);
                const double t1 = std::min(td, 1.0);
                auto edge_param = [&](double t) {
                    return span_t <= 0.0 ? uc : uc + (ud - uc) * (t - tc) / span_t;
                };
                // Ends plus a midpoint: the midpoint exposes a wrong-way
                // overlap even when both ends coincide with the flight ends.
                for (double t : {t0, 0.5 * (t0 + t1), t1})
                    out.push_back({t, P.cum_arc[i] + edge_param(t) * P.edge_lengths[i]});
            }
        }
    }
}

} // namespace

bool segment_over_water(const Polygon& P, Point2 a, Point2 b) {
    if (dist(a, b) <= P.geom_tol()) return true;
    std::vector<BoundaryContact> contacts;
    gather_contacts(P, a, b, contacts);
    std::vector<double> params{0.0, 1.0};
    for (const auto& c : contacts) params.push_back(c.param);
    std::sort(params.begin(), params.end());
    const Point2 r = b - a;
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        if (params[i + 1] - params[i] < 1e-12) continue;
        const double tm = 0.5 * (params[i] + params[i + 1]);
        if (P.locate(a + r * tm) == PointLocation::interior) return false;
    }
    return true;
}

bool segment_strictly_exterior(const Polygon& P, Point2 a, Point2 b) {
    const double len = dist(a, b);
    const double tol = P.geom_tol();
    if (len <= tol) return false;

    // Any boundary contact strictly inside the open segment disqualifies it,
    // including grazing a vertex and collinear overlap.
    std::vector<BoundaryContact> contacts;
    gather_contacts(P, a, b, contacts);
    const double tpad = std::max(1e-12, tol / len);
    for (const auto& c : contacts) {
        if (c.param > tpad && c.param < 1.0 - tpad) return false;
    }
    // No interior contact: the open segment lies wholly inside or outside.
    const Point2 mid = a + (b - a) * 0.5;
    return P.locate(mid) == PointLocation::exterior;
}

bool is_d_bridge(const Polygon& P, Point2 a, Point2 b, double d) {
    if (dist(a, b) > d + kReachEps) return false;
    return segment_strictly_exterior(P, a, b);
}

namespace detail {

bool chord_admissible(const Polygon& P, Point2 a, double abs_a, Point2 b, double abs_b) {
    if (!segment_over_water(P, a, b)) return false;
    const double L = P.perimeter;
    double span = abs_b - abs_a;
    if (span < 0.0) span += L;
    if (span == 0.0) span = L;
    std::vector<BoundaryContact> contacts;
    gather_contacts(P, a, b, contacts);
    std::sort(contacts.begin(), contacts.end(),
              [](const BoundaryContact& x, const BoundaryContact& y) {
                  return x.param < y.param;
              });
    const double ptol = 1e-9;
    const double atol = 1e-7 * L;
    double prev = 0.0;
    for (const auto& c : contacts) {
        if (c.param <= ptol || c.param >= 1.0 - ptol) continue;
        double rel = c.abs_arc - abs_a;
        if (rel < 0.0) rel += L;
        if (rel > span + atol) return false;
        if (rel < prev - atol) return false;
        prev = std::max(prev, rel);
    }

    return chord_caps_forward(P, a, abs_a, b, abs_b);
}

bool chord_caps_forward(const Polygon& P, Point2 a, double abs_a, Point2 b, double abs_b) {
    const double L = P.perimeter;
    double span = abs_b - abs_a;
    if (span < 0.0) span += L;
    if (span == 0.0) span = L;
    double loop2 = cross(a, b); // twice the signed area, accumulated
    Point2 prev_pt = b;
    std::vector<std::pair<double, std::size_t>> inner;
    for (std::size_t i = 0; i < P.size(); ++i) {
        double rel = P.cum_arc[i] - abs_a;
        if (rel < 0.0) rel += L;
        if (rel > 1e-12 * L && rel < span - 1e-12 * L) inner.push_back({rel, i});
    }
    std::sort(inner.begin(), inner.end(), std::greater<>()); // reversed interval
    for (auto [rel, i] : inner) {
        loop2 += cross(prev_pt, P.vertices[i]);
        prev_pt = P.vertices[i];
    }
    loop2 += cross(prev_pt, a);
    const double diag = P.geom_tol() * 1e9; // geom_tol is 1e-9 * bbox diagonal
    return loop2 <= 1e-9 * diag * diag;
}

VisGraph vis_dijkstra(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d) {
    const double L = P.perimeter;
    double span = P.abs_arc(b.edge, b.t) - P.abs_arc(a.edge, a.t);
    if (span < 0.0) span += L;
    if (span == 0.0 && is_sentinel(P, b)) span = L;

    VisGraph g;
    const double a0 = P.abs_arc(a.edge, a.t);

    // Nodes: a, polygon vertices strictly inside (a, b), then b.
    {
        BoundaryPoint start = a;
        start.arc = 0.0;
        g.nodes.push_back(start);
    }
    std::vector<std::pair<double, std::size_t>> inner;
    for (std::size_t i = 0; i < P.size(); ++i) {
        double rel = P.cum_arc[i] - a0;
        if (rel < 0.0) rel += L;
        if (rel > 1e-12 * L && rel < span - 1e-12 * L) inner.push_back({rel, i});
    }
    std::sort(inner.begin(), inner.end());
    for (auto [rel, i] : inner) {
        BoundaryPoint v;
        v.edge = i;
        v.t = 0.0;
        v.arc = rel;
        v.point = P.vertices[i];
        g.nodes.push_back(v);
    }
    {
        BoundaryPoint end = b;
        end.arc = span;
        g.nodes.push_back(end);
    }

    const std::size_t m = g.nodes.size();
    g.dist.assign(m, std::numeric_limits<double>::infinity());
    g.parent.assign(m, -1);

    auto abs_of = [&](double rel) {
        double v = a0 + rel;
        while (v >= L) v -= L;
        return v;
    };

    using QE = std::pair<double, std::size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
    g.dist[0] = 0.0;
    q.push({0.0, 0});
    while (!q.empty()) {
        auto [du, u] = q.top();
        q.pop();
        if (du > g.dist[u] + 1e-15) continue;
        if (u + 1 < m) { // boundary step to the next node
            const double w = du + (g.nodes[u + 1].arc - g.nodes[u].arc);
            if (w < g.dist[u + 1]) {
                g.dist[u + 1] = w;
                g.parent[u + 1] = static_cast<int>(u);
                q.push({w, u + 1});
            }
        }
        for (std::size_t v = u + 2; v < m; ++v) { // exterior chords, capped at d
            const double c = dist(g.nodes[u].point, g.nodes[v].point);
            if (c > d + kReachEps) continue;
            if (c <= P.geom_tol()) continue; // coincident (start vs. sentinel)
            const double w = du + c;
            if (w >= g.dist[v]) continue;
            if (!chord_admissible(P, g.nodes[u].point, abs_of(g.nodes[u].arc),
                                  g.nodes[v].point, abs_of(g.nodes[v].arc)))
                continue;
            g.dist[v] = w;
            g.parent[v] = static_cast<int>(u);
            q.push({w, v});
        }
    }
    return g;
}

} // namespace detail

DPath shortest_d_path(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d) {
    DPath path;
    path.from = a;
    path.to = b;
    if (!is_sentinel(P, b) && dist(a.point, b.point) <= P.geom_tol()) {
        path.total_length = 0.0;
        return path;
    }

    const auto g = detail::vis_dijkstra(P, a, b, d);
    const std::size_t m = g.nodes.size();

    std::vector<std::size_t> order;
    for (int u = static_cast<int>(m - 1); u != -1; u = g.parent[u])
        order.push_back(static_cast<std::size_t>(u));
    std::reverse(order.begin(), order.end());

    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const std::size_t u = order[i];
        const std::size_t v = order[i + 1];
        PathLeg leg;
        leg.from = g.nodes[u].point;
        leg.to = g.nodes[v].point;
        if (v == u + 1) {
            leg.kind = LegKind::boundary;
            leg.length = g.nodes[v].arc - g.nodes[u].arc;
        } else {
            leg.kind = LegKind::bridge;
            leg.length = dist(leg.from, leg.to);
        }
        path.legs.push_back(leg);
    }
    path.total_length = g.dist[m - 1];
    return path;
}

bool drone_reachable(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                     double d) {
    return shortest_d_path(P, a, b, d).total_length <= d + kReachEps;
}

} // namespace dhull
