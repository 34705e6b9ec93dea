#include "dhull/optsol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dhull {

namespace {

/// Reconstruct the ambient anchor (arc 0) from any anchored boundary point.
BoundaryPoint ambient_anchor(const Polygon& P, const BoundaryPoint& x) {
    const double L = P.perimeter;
    double abs0 = P.abs_arc(x.edge, x.t) - std::min(x.arc, L - 1e-15 * L);
    // Wrap into [0, L).
    abs0 = std::fmod(abs0, L);
    if (abs0 < 0.0) abs0 += L;
    // Locate edge/t at abs0.
    std::size_t e = static_cast<std::size_t>(
        std::upper_bound(P.cum_arc.begin(), P.cum_arc.end(), abs0) - P.cum_arc.begin());
    e = (e == 0) ? 0 : e - 1;
    double t = (abs0 - P.cum_arc[e]) / P.edge_lengths[e];
    if (t >= 1.0 - 1e-12) {
        e = (e + 1) % P.size();
        t = 0.0;
    }
    return make_anchor(P, e, t);
}

BoundaryPoint at_ambient_arc(const Polygon& P, const BoundaryPoint& s0, double arc) {
    const double L = P.perimeter;
    if (arc >= L * (1.0 - 1e-12)) return make_sentinel(P, s0);
    return point_at_arc(P, s0, std::max(arc, 0.0));
}

/// Pocket lookup: index of the lid whose chain contains boundary edge e.
int pocket_of_edge(const Polygon& P, std::size_t e) {
    for (std::size_t li = 0; li < P.lids.size(); ++li) {
        const auto& chain = P.lids[li].chain;
        for (std::size_t j = 0; j + 1 < chain.size(); ++j)
            if (chain[j] == e) return static_cast<int>(li);
    }
    return -1;
}

/// Arc position of (edge, t) measured along the pocket chain from its start.
double pocket_arc(const Polygon& P, const Lid& lid, std::size_t edge, double t) {
    double acc = 0.0;
    for (std::size_t j = 0; j + 1 < lid.chain.size(); ++j) {
        if (lid.chain[j] == edge) return acc + t * P.edge_lengths[edge];
        acc += P.edge_lengths[lid.chain[j]];
    }
    return acc;
}

struct PocketFoot {
    std::size_t edge = 0;
    double t = 0.0;
    Point2 pos;
    double chain_arc = 0.0;
};

/// Perpendicular foot of q on edge e, if it lands within the segment.
bool foot_on_edge(const Polygon& P, std::size_t e, Point2 q, PocketFoot& out) {
    const Point2 a = P.edge_start(e);
    const Point2 b = P.edge_end(e);
    const Point2 ab = b - a;
    const double l2 = dot(ab, ab);
    if (l2 <= 0.0) return false;
    const double t = dot(q - a, ab) / l2;
    if (t < -1e-12 || t > 1.0 + 1e-12) return false;
    out.edge = e;
    out.t = std::clamp(t, 0.0, 1.0);
    out.pos = a + ab * out.t;
    return true;
}

BoundaryPoint vertex0_point(const Polygon& P, std::size_t edge, double t) {
    return make_boundary_point(P, edge, t, make_anchor_at_vertex(P, 0));
}

} // namespace

std::vector<Point2> StationSolution::cycle_polyline() const {
    std::vector<Point2> pts;
    if (stations.empty()) return pts;
    pts.push_back(stations.front().point);
    for (const auto& hop : hops) {
        for (const auto& leg : hop.legs) {
            if (pts.empty() || dist(pts.back(), leg.to) > 0.0) pts.push_back(leg.to);
        }
    }
    // The closing hop ends at the sentinel (= first station); drop the repeat.
    if (pts.size() > 1 && dist(pts.front(), pts.back()) < 1e-12) pts.pop_back();
    return pts;
}

BoundaryPoint max_reach(const Polygon& P, const BoundaryPoint& x, double d) {
    const double L = P.perimeter;
    const BoundaryPoint s0 = ambient_anchor(P, x);
    const BoundaryPoint send = make_sentinel(P, s0);

    const auto g = detail::vis_dijkstra(P, x, send, d);
    const std::size_t m = g.nodes.size();
    if (g.dist[m - 1] <= d + kReachEps) return send;

    // Farthest reachable arc (measured from x) over every boundary segment
    // between consecutive graph nodes.
    double best = 0.0; // x itself
    for (std::size_t u = 0; u < m; ++u) {
        if (g.dist[u] <= d + kReachEps && g.nodes[u].arc > best) best = g.nodes[u].arc;
    }
    for (std::size_t u = 0; u + 1 < m; ++u) {
        const double s_lo = g.nodes[u].arc;
        const double s_hi = g.nodes[u + 1].arc;
        const double seg_len = s_hi - s_lo;
        if (seg_len <= 0.0) continue;
        const Point2 A = g.nodes[u].point;
        const Point2 B = g.nodes[u + 1].point;
        const Point2 AB = B - A;

        // Walk-through propagation from the segment start node.
        if (g.dist[u] <= d) {
            const double reach = s_lo + std::min(d - g.dist[u], seg_len);
            best = std::max(best, std::min(reach, s_hi));
        }

        // Final chord from any earlier node z landing inside this segment.
        for (std::size_t z = 0; z < m; ++z) {
            if (g.dist[z] > d - 1e-15) continue;
            if (g.nodes[z].arc > s_lo + 1e-15) continue; // chord must go forward
            const double r = d - g.dist[z];
            const Point2 Z = g.nodes[z].point;
            if (detail::point_segment_distance(Z, A, B) > r + kReachEps) continue;

            // |A + t*AB - Z| = r  =>  quadratic in t.
            const Point2 AZ = A - Z;
            const double qa = dot(AB, AB);
            const double qb = 2.0 * dot(AZ, AB);
            const double qc = dot(AZ, AZ) - r * r;
            const double disc = qb * qb - 4.0 * qa * qc;
            if (disc < 0.0 || qa <= 0.0) continue;
            const double sq = std::sqrt(disc);
            const double t_hi = std::min((-qb + sq) / (2.0 * qa), 1.0);
            const double t_lo = std::max((-qb - sq) / (2.0 * qa), 0.0);
            if (t_hi < t_lo) continue;

            // Candidate landing parameters: the radius-limited maximum plus
            // visibility breakpoints where the sightline grazes a vertex.
            std::vector<double> cands{t_hi};
            for (const auto& q : P.vertices) {
                const double den = cross(AB, q - Z);
                const double num = cross(q - A, q - Z);
                // A + t*AB on the line through Z and q: cross(A + t*AB - Z, q - Z) = 0.
                const double den2 = cross(AB, q - Z);
                if (std::abs(den2) < 1e-30) continue;
                const double t = cross(Z - A, q - Z) / den2;
                (void)den;
                (void)num;
                if (t > t_lo + 1e-15 && t < t_hi - 1e-15) cands.push_back(t);
            }
            std::sort(cands.begin(), cands.end(), std::greater<>());
            const double abs_x = P.abs_arc(x.edge, x.t);
            auto abs_of = [&](double rel) {
                double v = abs_x + rel;
                while (v >= L) v -= L;
                return v;
            };
            for (double t : cands) {
                const Point2 w = A + AB * t;
                if (dist(Z, w) <= P.geom_tol()) continue; // degenerate flight
                const double arc_w = s_lo + t * seg_len;
                if (arc_w <= g.nodes[z].arc + 1e-15) continue;
                if (arc_w <= best) break; // can't improve on this segment
                if (detail::chord_admissible(P, Z, abs_of(g.nodes[z].arc), w, abs_of(arc_w))) {
                    best = std::max(best, arc_w);
                    break;
                }
            }
        }
    }

    const double ambient = std::min(x.arc + best, L);
    if (ambient >= L * (1.0 - 1e-12)) return send;
    return at_ambient_arc(P, s0, ambient);
}

std::vector<Candidate> vertex_projections(const Polygon& P, std::size_t e, double d,
                                          const BoundaryPoint& /*s0 unused*/) {
    std::vector<Candidate> out;
    const int li = pocket_of_edge(P, e);
    if (li < 0) return out;
    const Lid& lid = P.lids[static_cast<std::size_t>(li)];

    bool have = false;
    PocketFoot best_foot;
    Point2 best_partner{};
    const double e_arc0 = pocket_arc(P, lid, e, 0.0);
    for (std::size_t v : lid.chain) {
        const Point2 q = P.vertices[v];
        PocketFoot f;
        if (!foot_on_edge(P, e, q, f)) continue;
        f.chain_arc = e_arc0 + f.t * P.edge_lengths[e];
        // Foot must precede the vertex along the pocket.
        double v_arc = pocket_arc(P, lid, v, 0.0);
        if (v == lid.chain.back()) v_arc = pocket_arc(P, lid, lid.chain[lid.chain.size() - 2], 1.0);
        if (f.chain_arc >= v_arc - 1e-12) continue;
        if (!is_d_bridge(P, f.pos, q, d)) continue;
        if (!have || f.chain_arc < best_foot.chain_arc) {
            have = true;
            best_foot = f;
            best_partner = q;
        }
    }
    if (have) {
        Candidate c;
        c.point = vertex0_point(P, best_foot.edge, best_foot.t);
        c.kind = CandidateKind::vertex_projection;
        c.partner = best_partner;
        out.push_back(c);
    }
    return out;
}

std::vector<Candidate> edge_d_projections(const Polygon& P, std::size_t e, double d,
                                          const BoundaryPoint& /*s0 unused*/) {
    std::vector<Candidate> out;
    const int li = pocket_of_edge(P, e);
    if (li < 0) return out;
    const Lid& lid = P.lids[static_cast<std::size_t>(li)];

    const Point2 a = P.edge_start(e);
    const Point2 b = P.edge_end(e);
    const Point2 dir = b - a;
    const double len = norm(dir);
    if (len <= 0.0) return out;
    // Water side of a clockwise polygon is to the left of the directed edge.
    const Point2 nrm{-dir.y / len, dir.x / len};
    const double e_arc0 = pocket_arc(P, lid, e, 0.0);
    const double tolL = 1e-9 * P.perimeter;

    struct Hit {
        Point2 y;          // bridge endpoint on the other edge
        PocketFoot foot;   // perpendicular foot on e
        double y_arc = 0;  // pocket arc of y
        bool later = false;
    };
    std::vector<Hit> hits;

    for (std::size_t j = 0; j + 1 < lid.chain.size(); ++j) {
        const std::size_t f = lid.chain[j];
        if (f == e) continue;
        const Point2 c = P.edge_start(f);
        const Point2 g = P.edge_end(f);
        // Signed perpendicular height above e.
        const double hc = dot(c - a, nrm);
        const double hg = dot(g - a, nrm);
        std::vector<double> us; // params on f where height == d
        const double dh = hg - hc;
        if (std::abs(dh) > 1e-15 * (1.0 + std::abs(hc) + std::abs(hg))) {
            const double u = (d - hc) / dh;
            if (u > -1e-12 && u < 1.0 + 1e-12) us.push_back(std::clamp(u, 0.0, 1.0));
        } else if (std::abs(hc - d) <= tolL) {
            us.push_back(0.0);
            us.push_back(1.0);
        }
        for (double u : us) {
            const Point2 y = c + (g - c) * u;
            PocketFoot foot;
            if (!foot_on_edge(P, e, y, foot)) continue;
            if (std::abs(dist(foot.pos, y) - d) > 1e-6 * std::max(1.0, d)) continue;
            if (!is_d_bridge(P, foot.pos, y, d)) continue;
            Hit h;
            h.y = y;
            h.foot = foot;
            h.foot.chain_arc = e_arc0 + foot.t * P.edge_lengths[e];
            h.y_arc = pocket_arc(P, lid, f, 0.0) + u * P.edge_lengths[f];
            h.later = h.y_arc > h.foot.chain_arc;
            hits.push_back(h);
        }
    }

    // Case 1: minimal foot on e from a later edge.
    {
        const Hit* best = nullptr;
        for (const auto& h : hits)
            if (h.later && (!best || h.foot.chain_arc < best->foot.chain_arc)) best = &h;
        if (best) {
            Candidate c;
            c.point = vertex0_point(P, best->foot.edge, best->foot.t);
            c.kind = CandidateKind::edge_d_projection_fwd;
            c.partner = best->y;
            out.push_back(c);
        }
    }
    // Case 2: bridge endpoint on an earlier edge generating the maximal foot on e.
    {
        const Hit* best = nullptr;
        for (const auto& h : hits)
            if (!h.later && (!best || h.foot.chain_arc > best->foot.chain_arc)) best = &h;
        if (best) {
            std::size_t ye = 0;
            double yt = 0.0;
            if (P.project_to_boundary(best->y, ye, yt)) {
                Candidate c;
                c.point = vertex0_point(P, ye, yt);
                c.kind = CandidateKind::edge_d_projection_bwd;
                c.partner = best->foot.pos;
                out.push_back(c);
            }
        }
    }
    return out;
}

TwoHopResult two_hop_step(const Polygon& P, const BoundaryPoint& s_prev, double d) {
    const double L = P.perimeter;
    const double tolL = 1e-9 * L;
    const BoundaryPoint s0 = ambient_anchor(P, s_prev);

    const BoundaryPoint w1 = max_reach(P, s_prev, d);
    if (is_sentinel(P, w1)) return {w1, w1}; // one hop closes the cycle

    // Candidate relays in (s_prev, w1].
    struct Relay {
        BoundaryPoint pt;
    };
    std::vector<BoundaryPoint> cands;
    cands.push_back(w1);
    auto in_window = [&](double arc) {
        return arc > s_prev.arc + tolL && arc <= w1.arc + tolL;
    };
    for (std::size_t i = 0; i < P.size(); ++i) {
        const auto v = make_boundary_point(P, i, 0.0, s0);
        if (in_window(v.arc)) cands.push_back(v);
    }
    for (std::size_t e = 0; e < P.size(); ++e) {
        auto vp = vertex_projections(P, e, d, s0);
        auto ep = edge_d_projections(P, e, d, s0);
        for (auto list : {&vp, &ep}) {
            for (const auto& c : *list) {
                const auto pt = make_boundary_point(P, c.point.edge, c.point.t, s0);
                if (in_window(pt.arc)) cands.push_back(pt);
            }
        }
    }

    bool have = false;
    BoundaryPoint best_s, best_y;
    for (const auto& c : cands) {
        if (dist(c.point, s_prev.point) <= P.geom_tol() && !is_sentinel(P, c)) continue;
        if (c.arc < w1.arc - tolL && !drone_reachable(P, s_prev, c, d)) continue;
        const BoundaryPoint y = max_reach(P, c, d);
        if (!have || y.arc > best_y.arc + tolL ||
            (std::abs(y.arc - best_y.arc) <= tolL && c.arc > best_s.arc)) {
            have = true;
            best_s = c;
            best_y = y;
        }
    }
    if (!have || best_y.arc <= s_prev.arc + tolL)
        throw NoProgressError("two-hop step cannot advance the frontier");
    return {best_s, best_y};
}

StationSolution run_optsol(const Polygon& P, const BoundaryPoint& s0, double d) {
    if (!(d > 0.0)) throw OutOfRangeError("flight range must be positive");
    if (!on_hull(P, s0.point))
        throw StartNotOnHullError("start station must lie on the convex hull");

    const double L = P.perimeter;
    const BoundaryPoint send = make_sentinel(P, s0);

    StationSolution sol;
    sol.d = d;
    sol.stations.push_back(s0);

    if (!drone_reachable(P, s0, send, d)) {
        const auto max_iter =
            static_cast<std::size_t>(std::ceil(L / d)) * 4 + 16;
        BoundaryPoint prev = s0;
        for (std::size_t it = 0;; ++it) {
            if (it > max_iter) throw NoProgressError("station loop failed to terminate");
            const auto step = two_hop_step(P, prev, d);
            sol.stations.push_back(step.s_next);
            if (is_sentinel(P, step.y_next)) break;
            prev = step.s_next;
        }
    }

    sol.k = sol.stations.size();
    for (std::size_t i = 0; i + 1 < sol.stations.size(); ++i)
        sol.hops.push_back(shortest_d_path(P, sol.stations[i], sol.stations[i + 1], d));
    sol.hops.push_back(shortest_d_path(P, sol.stations.back(), send, d));
    return sol;
}

} // namespace dhull
