#include "dhull/appsol.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "parallel_util.hpp"

namespace dhull {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double abs_arc_of(const Polygon& P, const BoundaryPoint& p) {
    return P.abs_arc(p.edge, p.t);
}

/// Budgeted single-source shortest paths over the forward DAG H.
void dag_sweep(const GeodesicGraph& H, std::size_t src, double budget,
               std::vector<double>& dist, std::vector<int>* parent = nullptr) {
    const std::size_t nc = H.node_count;
    dist.assign(nc, kInf);
    if (parent) parent->assign(nc, -1);
    dist[src] = 0.0;
    for (std::size_t u = src; u < nc; ++u) {
        if (dist[u] > budget) continue;
        for (const auto& e : H.adj[u]) {
            const double w = dist[u] + e.weight;
            if (w <= budget + kReachEps && w < dist[e.to]) {
                dist[e.to] = w;
                if (parent) (*parent)[e.to] = static_cast<int>(u);
            }
        }
    }
}

/// E2 admissibility: strictly exterior flight chord capping its interval
/// forward.
bool e2_ok(const Polygon& P, Point2 a, double abs_a, Point2 b, double abs_b) {
    if (!segment_strictly_exterior(P, a, b)) return false;
    return detail::chord_caps_forward(P, a, abs_a, b, abs_b);
}

/// O(1) pre-reject for E2 candidates at a mid-edge grid point: a strictly
/// exterior segment must leave the boundary into the water side (left of the
/// directed edge on a clockwise polygon). Vertices keep the full test.
bool leaves_into_water(const Polygon& P, const BoundaryPoint& p, Point2 toward) {
    if (p.t <= 1e-12) return true; // vertex: exterior cone handled by the full test
    const Point2 a = P.edge_start(p.edge);
    const Point2 b = P.edge_end(p.edge);
    const Point2 dir = toward - p.point;
    // left normal of (b - a) is (-(b-a).y, (b-a).x)
    const double side = -(b.y - a.y) * dir.x + (b.x - a.x) * dir.y;
    return side > 1e-12 * norm(b - a) * norm(dir);
}

/// Multi-source budgeted sweep: dist from the nearest seed, with seed
/// provenance for path reconstruction.
void layered_sweep(const GeodesicGraph& H, const std::vector<std::size_t>& seeds,
                   std::vector<double>& dist, std::vector<int>& origin) {
    const std::size_t nc = H.node_count;
    dist.assign(nc, kInf);
    origin.assign(nc, -1);
    std::size_t first = nc;
    for (std::size_t s : seeds) {
        dist[s] = 0.0;
        origin[s] = static_cast<int>(s);
        first = std::min(first, s);
    }
    for (std::size_t u = first; u < nc; ++u) {
        if (dist[u] > H.d) continue;
        for (const auto& e : H.adj[u]) {
            const double w = dist[u] + e.weight;
            if (w <= H.d + kReachEps && w < dist[e.to]) {
                dist[e.to] = w;
                origin[e.to] = origin[u];
            }
        }
    }
}

} // namespace

bool ReachGraph::adjacent(std::size_t i, std::size_t j) const {
    if (i == j) return false;
    if (i > j) std::swap(i, j);
    if (dense) return adj[i * node_count + j] != 0;
    std::vector<double> dist;
    std::vector<int> origin;
    layered_sweep(H, {i}, dist, origin);
    return dist[j] <= H.d + kReachEps;
}

Discretization discretize(const Polygon& P, const BoundaryPoint& s0, double eps) {
    if (!(eps > 0.0)) throw EpsilonNonPositiveError("discretization pitch must be positive");

    Discretization X;
    X.epsilon = eps;
    const std::size_t n = P.size();
    for (std::size_t e = 0; e < n; ++e) {
        // Split at s0 if it lies strictly inside this edge, so that s0
        // becomes a grid point and spacing stays within eps on both sides.
        std::vector<double> cuts{0.0, 1.0};
        if (s0.edge == e && s0.t > 1e-12 && s0.t < 1.0 - 1e-12)
            cuts.insert(cuts.begin() + 1, s0.t);
        for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
            const double t0 = cuts[c];
            const double t1 = cuts[c + 1];
            const double len = (t1 - t0) * P.edge_lengths[e];
            const auto pieces = std::max<std::size_t>(
                1, static_cast<std::size_t>(std::ceil(len / eps - 1e-12)));
            for (std::size_t j = 0; j < pieces; ++j) {
                const double t = t0 + (t1 - t0) * static_cast<double>(j) / pieces;
                X.points.push_back(make_boundary_point(P, e, t, s0));
            }
        }
    }
    std::sort(X.points.begin(), X.points.end(),
              [](const BoundaryPoint& a, const BoundaryPoint& b) { return a.arc < b.arc; });
    X.points.erase(std::unique(X.points.begin(), X.points.end(),
                               [&](const BoundaryPoint& a, const BoundaryPoint& b) {
                                   return std::abs(a.arc - b.arc) <= 1e-12 * P.perimeter;
                               }),
                   X.points.end());
    X.sentinel = make_sentinel(P, s0);
    return X;
}

ReachGraph build_reach_graph(const Polygon& P, const Discretization& X, double d) {
    ReachGraph G;
    G.X = X;
    const std::size_t m = X.points.size();
    const std::size_t nc = m + 1;
    G.node_count = nc;

    auto pos = [&](std::size_t i) -> Point2 {
        return i < m ? X.points[i].point : X.sentinel.point;
    };
    std::vector<double> abs(nc);
    for (std::size_t i = 0; i < m; ++i) abs[i] = abs_arc_of(P, X.points[i]);
    abs[m] = abs_arc_of(P, X.sentinel);

    GeodesicGraph H;
    H.node_count = nc;
    H.d = d;
    H.adj.assign(nc, {});

    // E1: boundary step to the next grid point. All polygon vertices are grid
    // points, so each step is a straight sub-segment of one edge.
    for (std::size_t i = 0; i + 1 < nc; ++i) {
        const double w = dist(pos(i), pos(i + 1));
        H.adj[i].push_back({static_cast<std::uint32_t>(i + 1), false, w});
    }

    // E2: strictly exterior forward flight chords of length <= d.
    const auto bp_at = [&](std::size_t i) -> const BoundaryPoint& {
        return i < m ? X.points[i] : X.sentinel;
    };
    std::vector<std::vector<GeodesicGraph::Edge>> e2(nc);
    detail::parallel_for(nc - 1, [&](std::size_t i) {
        for (std::size_t j = i + 2; j < nc; ++j) {
            if (i == 0 && j == nc - 1) continue; // x_0 vs its own sentinel copy
            const double len = dist(pos(i), pos(j));
            if (len > d + kReachEps) continue;
            if (len <= P.geom_tol()) continue;
            if (!leaves_into_water(P, bp_at(i), pos(j))) continue;
            if (!leaves_into_water(P, bp_at(j), pos(i))) continue;
            if (!e2_ok(P, pos(i), abs[i], pos(j), abs[j])) continue;
            e2[i].push_back({static_cast<std::uint32_t>(j), true, len});
        }
    });
    for (std::size_t i = 0; i < nc; ++i)
        H.adj[i].insert(H.adj[i].end(), e2[i].begin(), e2[i].end());

    G.H = std::move(H);
    G.dense = nc <= 4096;
    if (G.dense) {
        G.adj.assign(nc * nc, 0);
        std::vector<std::vector<double>> dist_rows(nc);
        detail::parallel_for(nc - 1, [&](std::size_t i) { dag_sweep(G.H, i, d, dist_rows[i]); });
        for (std::size_t i = 0; i + 1 < nc; ++i)
            for (std::size_t j = i + 1; j < nc; ++j)
                if (dist_rows[i][j] <= d + kReachEps) G.adj[i * nc + j] = 1;
    }
    return G;
}

std::vector<BoundaryPoint> shortest_cycle(const ReachGraph& G) {
    // Fewest hops from x_0 to the sentinel: one multi-source budgeted sweep
    // per BFS layer (O(hops * |E|), no adjacency matrix needed).
    const std::size_t nc = G.node_count;
    const std::size_t sent = nc - 1;
    std::vector<int> layer(nc, -1);
    std::vector<int> pred(nc, -1); // node of the previous layer that reaches it
    layer[0] = 0;
    std::vector<std::size_t> frontier{0};
    std::vector<double> dist;
    std::vector<int> origin;
    bool reached = false;
    for (int t = 1; !frontier.empty() && !reached; ++t) {
        layered_sweep(G.H, frontier, dist, origin);
        std::vector<std::size_t> next;
        for (std::size_t v = 0; v < nc; ++v) {
            if (layer[v] != -1 || dist[v] > G.H.d + kReachEps) continue;
            layer[v] = t;
            pred[v] = origin[v];
            if (v == sent) reached = true;
            else next.push_back(v);
        }
        frontier = std::move(next);
    }
    if (!reached)
        throw DisconnectedError("no station chain reaches the sentinel at this range");

    std::vector<std::size_t> chain;
    for (int u = static_cast<int>(sent); u != -1; u = pred[u]) {
        chain.push_back(static_cast<std::size_t>(u));
        if (u == 0) break;
    }
    chain.push_back(0);
    std::reverse(chain.begin(), chain.end());
    chain.erase(std::unique(chain.begin(), chain.end()), chain.end());

    std::vector<BoundaryPoint> stations;
    for (std::size_t u : chain)
        if (u != sent) stations.push_back(G.X.points[u]);
    return stations;
}

namespace {

/// Shortest H-path between two nodes as a DPath with boundary/bridge legs.
DPath h_path(const Polygon& P, const ReachGraph& G, std::size_t from, std::size_t to) {
    std::vector<double> dist_row;
    std::vector<int> parent;
    dag_sweep(G.H, from, G.H.d, dist_row, &parent);

    DPath path;
    path.from = from < G.X.points.size() ? G.X.points[from] : G.X.sentinel;
    path.to = to < G.X.points.size() ? G.X.points[to] : G.X.sentinel;
    std::vector<std::size_t> chain;
    for (int u = static_cast<int>(to); u != -1; u = parent[u])
        chain.push_back(static_cast<std::size_t>(u));
    std::reverse(chain.begin(), chain.end());

    auto node_pos = [&](std::size_t i) -> Point2 {
        return i < G.X.points.size() ? G.X.points[i].point : G.X.sentinel.point;
    };
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const std::size_t u = chain[i];
        const std::size_t v = chain[i + 1];
        PathLeg leg;
        leg.from = node_pos(u);
        leg.to = node_pos(v);
        leg.length = dist(leg.from, leg.to);
        leg.kind = (v == u + 1) ? LegKind::boundary : LegKind::bridge;
        // Merge consecutive collinear boundary steps into one leg.
        if (leg.kind == LegKind::boundary && !path.legs.empty() &&
            path.legs.back().kind == LegKind::boundary) {
            auto& prev = path.legs.back();
            if (std::abs(cross(prev.to - prev.from, leg.to - prev.from)) <=
                P.geom_tol() * std::max(1.0, dist(prev.from, leg.to))) {
                prev.to = leg.to;
                prev.length += leg.length;
                continue;
            }
        }
        path.legs.push_back(leg);
    }
    path.total_length = dist_row[to];
    return path;
}

StationSolution assemble(const Polygon& P, const ReachGraph& G,
                         const std::vector<std::size_t>& chain_nodes, double d) {
    StationSolution sol;
    sol.d = d;
    for (std::size_t u : chain_nodes) sol.stations.push_back(G.X.points[u]);
    sol.k = sol.stations.size();
    for (std::size_t i = 0; i + 1 < chain_nodes.size(); ++i)
        sol.hops.push_back(h_path(P, G, chain_nodes[i], chain_nodes[i + 1]));
    sol.hops.push_back(h_path(P, G, chain_nodes.back(), G.node_count - 1));
    return sol;
}

std::size_t node_at_arc(const std::vector<BoundaryPoint>& pts, double arc, double L) {
    std::size_t best = 0;
    double best_gap = 1e300;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double g = std::abs(pts[i].arc - arc);
        g = std::min(g, L - g);
        if (g < best_gap) {
            best_gap = g;
            best = i;
        }
    }
    return best;
}

} // namespace

StationSolution run_appsol(const Polygon& P, const BoundaryPoint& s0, double d, double eps) {
    const auto X = discretize(P, s0, eps);
    const auto G = build_reach_graph(P, X, d);
    const auto stations = shortest_cycle(G);

    std::vector<std::size_t> chain;
    for (const auto& st : stations)
        chain.push_back(node_at_arc(X.points, st.arc, P.perimeter));
    return assemble(P, G, chain, d);
}

StationSolution run_appsol2(const Polygon& P, const BoundaryPoint& s0, double d, double eps) {
    const auto X = discretize(P, s0, eps);
    const std::size_t m = X.points.size();
    const double L = P.perimeter;
    if (m > 8192)
        throw Error("grid too large for the all-starts variant; increase epsilon");

    std::vector<Point2> pos(m);
    std::vector<double> abs(m);
    for (std::size_t i = 0; i < m; ++i) {
        pos[i] = X.points[i].point;
        abs[i] = abs_arc_of(P, X.points[i]);
    }

    // Ordered flight chords between grid points, independent of the start:
    // admissibility depends only on the clockwise span i -> j.
    std::vector<char> flight(m * m, 0);
    detail::parallel_for(m, [&](std::size_t i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const double len = dist(pos[i], pos[j]);
            if (len > d + kReachEps || len <= P.geom_tol()) continue;
            if (!leaves_into_water(P, X.points[i], pos[j])) continue;
            if (!leaves_into_water(P, X.points[j], pos[i])) continue;
            if (e2_ok(P, pos[i], abs[i], pos[j], abs[j])) flight[i * m + j] = 1;
        }
    });
    std::vector<double> gap(m); // boundary arc from i to i+1 (cyclic)
    for (std::size_t i = 0; i < m; ++i) {
        const double b = (i + 1 < m) ? X.points[i + 1].arc : L;
        gap[i] = b - X.points[i].arc;
    }

    // Cyclic budgeted sweep from each source over rotated positions; position
    // m is the full wrap back to the source.
    std::vector<char> reach(m * (m + 1), 0);
    detail::parallel_for(m, [&](std::size_t src) {
        std::vector<double> dv(m + 1, kInf);
        dv[0] = 0.0;
        auto node_of = [&](std::size_t p) { return (src + p) % m; };
        for (std::size_t p = 0; p < m; ++p) {
            if (dv[p] == kInf) continue;
            const std::size_t u = node_of(p);
            const double wb = dv[p] + gap[u];
            if (wb <= d + kReachEps && wb < dv[p + 1]) dv[p + 1] = wb;
            if (dv[p] > d) continue;
            for (std::size_t q = p + 2; q <= m; ++q) {
                const std::size_t v = node_of(q % m);
                if (!flight[u * m + v]) continue;
                const double w = dv[p] + dist(pos[u], pos[v]);
                if (w <= d + kReachEps && w < dv[q]) dv[q] = w;
            }
        }
        for (std::size_t p = 1; p <= m; ++p)
            if (dv[p] <= d + kReachEps) reach[src * (m + 1) + p] = 1;
    });

    // Admissible starts: drone distance from x_0 at most d + eps/2.
    const auto G0 = build_reach_graph(P, X, d);
    std::vector<double> from_x0;
    dag_sweep(G0.H, 0, d + eps / 2.0, from_x0);

    std::size_t best_start = m;
    std::size_t best_k = static_cast<std::size_t>(-1);
    std::vector<std::size_t> best_chain; // rotated positions, excluding the wrap
    for (std::size_t s = 0; s < m; ++s) {
        if (from_x0[s] > d + eps / 2.0 + kReachEps) continue;
        std::vector<int> parent(m + 1, -1);
        std::vector<char> seen(m + 1, 0);
        std::vector<std::size_t> frontier{0};
        seen[0] = 1;
        bool done = false;
        while (!frontier.empty() && !done) {
            std::vector<std::size_t> next;
            for (std::size_t p : frontier) {
                const std::size_t u = (s + p) % m;
                for (std::size_t q = p + 1; q <= m && !done; ++q) {
                    if (seen[q]) continue;
                    // reach is indexed by rotated position relative to u's
                    // own rotation: q - p positions ahead of u.
                    if (!reach[u * (m + 1) + (q - p)]) continue;
                    seen[q] = 1;
                    parent[q] = static_cast<int>(p);
                    if (q == m) done = true;
                    else next.push_back(q);
                }
                if (done) break;
            }
            frontier = std::move(next);
        }
        if (!done) continue;
        std::vector<std::size_t> chain;
        for (int p = static_cast<int>(m); p != -1; p = parent[p])
            chain.push_back(static_cast<std::size_t>(p));
        std::reverse(chain.begin(), chain.end());
        const std::size_t hops = chain.size() - 1;
        if (hops < best_k) {
            best_k = hops;
            best_start = s;
            best_chain.assign(chain.begin(), chain.end() - 1); // drop the wrap
        }
    }
    if (best_start == m)
        throw DisconnectedError("no admissible start closes a cycle at this range");

    // Rebuild the winning cycle on its own anchor for exact hop paths.
    const auto start_bp = X.points[best_start];
    const auto s_anchor = make_anchor(P, start_bp.edge, start_bp.t);
    const auto Xs = discretize(P, s_anchor, eps);
    const auto Gs = build_reach_graph(P, Xs, d);
    std::vector<std::size_t> chain_nodes;
    for (std::size_t p : best_chain) {
        const std::size_t v = (best_start + p) % m;
        double target = abs[v] - abs[best_start];
        if (target < 0.0) target += L;
        chain_nodes.push_back(node_at_arc(Xs.points, target, L));
    }
    return assemble(P, Gs, chain_nodes, d);
}

} // namespace dhull
