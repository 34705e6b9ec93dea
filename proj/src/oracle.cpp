#include "dhull/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

namespace dhull::oracle {

namespace {

constexpr double kChordEps = 1e-9; // slack on the per-chord cap
constexpr double kPi = 3.14159265358979323846;

double o_cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
double o_dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
double o_dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double o_diag(const Polygon& P) {
    double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
    for (const auto& p : P.vertices) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::max(std::hypot(xmax - xmin, ymax - ymin), 1e-300);
}

double seg_point_dist(Point2 q, Point2 a, Point2 b) {
    const Point2 ab{b.x - a.x, b.y - a.y};
    const double l2 = o_dot(ab, ab);
    if (l2 <= 0.0) return o_dist(q, a);
    double t = o_dot({q.x - a.x, q.y - a.y}, ab) / l2;
    t = std::clamp(t, 0.0, 1.0);
    return o_dist(q, {a.x + ab.x * t, a.y + ab.y * t});
}

bool strictly_inside(const Polygon& P, Point2 q, double tol) {
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n; ++i)
        if (seg_point_dist(q, P.edge_start(i), P.edge_end(i)) <= tol) return false;
    bool in = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = P.edge_start(i);
        const Point2 b = P.edge_end(i);
        if ((a.y > q.y) != (b.y > q.y)) {
            const double xint = a.x + (q.y - a.y) / (b.y - a.y) * (b.x - a.x);
            if (q.x < xint) in = !in;
        }
    }
    return in;
}

struct Contact {
    double param = 0.0;   // position along the flight segment, in [0,1]
    double abs_arc = 0.0; // boundary arc of the touched point
};

/// Boundary contacts of segment pq: crossing/graze points plus both ends of
/// every collinear overlap.
void gather_contacts(const Polygon& P, Point2 p, Point2 q, double tol,
                     std::vector<Contact>& out) {
    const Point2 r{q.x - p.x, q.y - p.y};
    const double rlen = std::hypot(r.x, r.y);
    const std::size_t n = P.size();
    const double ctol = tol * std::max(rlen, 1.0);
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 c = P.edge_start(i);
        const Point2 d = P.edge_end(i);
        const Point2 s{d.x - c.x, d.y - c.y};
        const double denom = o_cross(r, s);
        const Point2 cp{c.x - p.x, c.y - p.y};
        if (std::abs(denom) > ctol) {
            const double t = o_cross(cp, s) / denom;
            const double u = o_cross(cp, r) / denom;
            if (t > -1e-12 && t < 1.0 + 1e-12 && u > -1e-12 && u < 1.0 + 1e-12)
                out.push_back({std::clamp(t, 0.0, 1.0),
                               P.cum_arc[i] + std::clamp(u, 0.0, 1.0) * P.edge_lengths[i]});
        } else if (std::abs(o_cross(cp, r)) <= ctol) {
            const double l2 = rlen * rlen;
            if (l2 <= 0.0) continue;
            double tc = o_dot(cp, r) / l2;
            double td = o_dot({d.x - p.x, d.y - p.y}, r) / l2;
            double uc = 0.0, ud = 1.0;
            if (tc > td) {
                std::swap(tc, td);
                std::swap(uc, ud);
            }
            if (td > 0.0 && tc < 1.0) {
                // Clamp the overlap to the flight segment, adjusting edge params.
                const double span_t = td - tc;
                double t0 = std::max(tc, 0.0), t1 = std::min(td, 1.0);
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

/// Open segment pq avoids the polygon interior: split at every boundary
/// contact parameter and test a midpoint of each piece.
bool over_water(const Polygon& P, Point2 p, Point2 q, double tol) {
    const Point2 r{q.x - p.x, q.y - p.y};
    if (std::hypot(r.x, r.y) <= tol) return true;
    std::vector<Contact> contacts;
    gather_contacts(P, p, q, tol, contacts);
    std::vector<double> params{0.0, 1.0};
    for (const auto& c : contacts) params.push_back(c.param);
    std::sort(params.begin(), params.end());
    for (std::size_t i = 0; i + 1 < params.size(); ++i) {
        if (params[i + 1] - params[i] < 1e-12) continue;
        const double tm = 0.5 * (params[i] + params[i + 1]);
        const Point2 mid{p.x + r.x * tm, p.y + r.y * tm};
        if (strictly_inside(P, mid, tol)) return false;
    }
    return true;
}

/// Clockwise chord admissibility: over water AND every boundary contact,
/// taken in flight order, advances clockwise and stays inside [u, v], AND
/// the loop (chord + reversed skipped interval) does not wind
/// counterclockwise. Rejects wrong-way and out-and-back shortcuts.
bool chord_clockwise_ok(const Polygon& P, Point2 p, double p_abs, Point2 q, double q_abs,
                        double tol) {
    if (!over_water(P, p, q, tol)) return false;
    const double L = P.perimeter;
    double span = q_abs - p_abs;
    if (span < 0.0) span += L;
    if (span == 0.0) span = L;
    std::vector<Contact> contacts;
    gather_contacts(P, p, q, tol, contacts);
    std::sort(contacts.begin(), contacts.end(),
              [](const Contact& a, const Contact& b) { return a.param < b.param; });
    const double ptol = 1e-9;
    const double atol = 1e-7 * L;
    double prev = 0.0;
    for (const auto& c : contacts) {
        if (c.param <= ptol || c.param >= 1.0 - ptol) continue; // the endpoints themselves
        double rel = c.abs_arc - p_abs;
        if (rel < 0.0) rel += L;
        if (rel > span + atol) return false;
        if (rel < prev - atol) return false;
        prev = std::max(prev, rel);
    }

    double loop2 = o_cross(p, q);
    Point2 prev_pt = q;
    std::vector<std::pair<double, std::size_t>> inner;
    for (std::size_t i = 0; i < P.size(); ++i) {
        double rel = P.cum_arc[i] - p_abs;
        if (rel < 0.0) rel += L;
        if (rel > 1e-12 * L && rel < span - 1e-12 * L) inner.push_back({rel, i});
    }
    std::sort(inner.begin(), inner.end(), std::greater<>());
    for (auto [rel, i] : inner) {
        loop2 += o_cross(prev_pt, P.vertices[i]);
        prev_pt = P.vertices[i];
    }
    loop2 += o_cross(prev_pt, p);
    const double diag = o_diag(P);
    return loop2 <= 1e-9 * diag * diag;
}

struct GridPoint {
    double arc = 0.0; // clockwise arc from the interval start
    Point2 pos;
};

Point2 position_at(const Polygon& P, double abs_arc) {
    const double L = P.perimeter;
    while (abs_arc >= L) abs_arc -= L;
    std::size_t e = static_cast<std::size_t>(
        std::upper_bound(P.cum_arc.begin(), P.cum_arc.end(), abs_arc) - P.cum_arc.begin());
    e = (e == 0) ? 0 : e - 1;
    const double t = (abs_arc - P.cum_arc[e]) / P.edge_lengths[e];
    return P.edge_point(e, std::min(t, 1.0));
}

/// Dense grid of the clockwise interval [a, b]: endpoints, every polygon
/// vertex inside, and filler points at spacing <= pitch.
std::vector<GridPoint> interval_grid(const Polygon& P, const BoundaryPoint& a,
                                     const BoundaryPoint& b, double pitch) {
    const double L = P.perimeter;
    double span = P.abs_arc(b.edge, b.t) - P.abs_arc(a.edge, a.t);
    if (span < 0.0) span += L;
    if (span == 0.0 && is_sentinel(P, b)) span = L;

    std::vector<double> brk{0.0, span};
    const double a0 = P.abs_arc(a.edge, a.t);
    for (std::size_t i = 0; i < P.size(); ++i) {
        double rel = P.cum_arc[i] - a0;
        if (rel < 0.0) rel += L;
        if (rel > 1e-12 * L && rel < span - 1e-12 * L) brk.push_back(rel);
    }
    std::sort(brk.begin(), brk.end());

    std::vector<GridPoint> grid;
    for (std::size_t i = 0; i + 1 < brk.size(); ++i) {
        const double lo = brk[i];
        const double len = brk[i + 1] - lo;
        const auto pieces =
            std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(len / pitch)));
        for (std::size_t j = 0; j < pieces; ++j) {
            const double arc = lo + len * static_cast<double>(j) / static_cast<double>(pieces);
            grid.push_back({arc, position_at(P, a0 + arc)});
        }
    }
    grid.push_back({span, b.point});
    return grid;
}

double grid_dijkstra(const Polygon& P, const std::vector<GridPoint>& g, double a0, double d,
                     double tol) {
    const double L = P.perimeter;
    auto abs_of = [&](double arc) {
        double a = a0 + arc;
        while (a >= L) a -= L;
        return a;
    };
    const std::size_t m = g.size();
    std::vector<double> distv(m, std::numeric_limits<double>::infinity());
    using QE = std::pair<double, std::size_t>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
    distv[0] = 0.0;
    q.push({0.0, 0});
    while (!q.empty()) {
        auto [du, u] = q.top();
        q.pop();
        if (du > distv[u] + 1e-15) continue;
        if (u == m - 1) break;
        if (u + 1 < m) {
            const double w = du + (g[u + 1].arc - g[u].arc);
            if (w < distv[u + 1]) {
                distv[u + 1] = w;
                q.push({w, u + 1});
            }
        }
        for (std::size_t v = u + 2; v < m; ++v) {
            const double c = o_dist(g[u].pos, g[v].pos);
            if (c > d + kChordEps) continue;
            if (c <= tol) continue; // coincident points (start vs. sentinel)
            if (du + c >= distv[v]) continue;
            if (!chord_clockwise_ok(P, g[u].pos, abs_of(g[u].arc), g[v].pos, abs_of(g[v].arc),
                                    tol))
                continue;
            distv[v] = du + c;
            q.push({distv[v], v});
        }
    }
    return distv[m - 1];
}

} // namespace

double brute_geodesic(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d, double pitch) {
    if (!is_sentinel(P, b) && o_dist(a.point, b.point) <= P.geom_tol()) return 0.0;
    const double tol = 1e-9 * o_diag(P);
    const auto grid = interval_grid(P, a, b, pitch);
    return grid_dijkstra(P, grid, P.abs_arc(a.edge, a.t), d, tol);
}

std::size_t brute_min_cycle(const Polygon& P, const std::vector<BoundaryPoint>& X, double d) {
    const std::size_t m = X.size();
    if (m < 2) return 0;
    const double tol = 1e-9 * o_diag(P);
    const double L = P.perimeter;

    // One dense grid for the whole cycle, containing every X point.
    std::vector<GridPoint> grid;
    const double a0 = P.abs_arc(X[0].edge, X[0].t);
    {
        std::vector<double> arcs;
        for (const auto& x : X) arcs.push_back(std::min(x.arc, L));
        for (std::size_t i = 0; i < P.size(); ++i) {
            double rel = P.cum_arc[i] - a0;
            if (rel < 0.0) rel += L;
            arcs.push_back(rel);
        }
        const auto fills = static_cast<std::size_t>(96);
        for (std::size_t j = 0; j < fills; ++j)
            arcs.push_back(L * static_cast<double>(j) / static_cast<double>(fills));
        std::sort(arcs.begin(), arcs.end());
        arcs.erase(std::unique(arcs.begin(), arcs.end(),
                               [&](double p, double q) { return q - p <= 1e-12 * L; }),
                   arcs.end());
        while (!arcs.empty() && L - arcs.back() <= 1e-12 * L) arcs.pop_back();
        arcs.push_back(L);
        for (double arc : arcs) grid.push_back({arc, position_at(P, a0 + arc)});
    }
    const std::size_t G = grid.size();

    // X -> grid index.
    std::vector<std::size_t> at(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double target = std::min(X[i].arc, L);
        std::size_t best = 0;
        double bestd = 1e300;
        for (std::size_t gidx = 0; gidx < G; ++gidx) {
            const double dd = std::abs(grid[gidx].arc - target);
            if (dd < bestd) {
                bestd = dd;
                best = gidx;
            }
        }
        at[i] = best;
    }

    // Pairwise chord admissibility, computed once.
    auto abs_of = [&](double arc) {
        double a = a0 + arc;
        while (a >= L) a -= L;
        return a;
    };
    std::vector<std::vector<std::pair<std::size_t, double>>> chords(G);
    for (std::size_t u = 0; u < G; ++u) {
        for (std::size_t v = u + 2; v < G; ++v) {
            if (u == 0 && v == G - 1) continue; // start and sentinel coincide
            const double c = o_dist(grid[u].pos, grid[v].pos);
            if (c > d + kChordEps) continue;
            if (c <= tol) continue;
            if (!chord_clockwise_ok(P, grid[u].pos, abs_of(grid[u].arc), grid[v].pos,
                                    abs_of(grid[v].arc), tol))
                continue;
            chords[u].push_back({v, c});
        }
    }

    // Budgeted Dijkstra from each X point over the grid.
    std::vector<std::vector<char>> hop(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<double> distv(G, std::numeric_limits<double>::infinity());
        using QE = std::pair<double, std::size_t>;
        std::priority_queue<QE, std::vector<QE>, std::greater<>> q;
        distv[at[i]] = 0.0;
        q.push({0.0, at[i]});
        while (!q.empty()) {
            auto [du, u] = q.top();
            q.pop();
            if (du > distv[u] + 1e-15) continue;
            if (u + 1 < G) {
                const double w = du + (grid[u + 1].arc - grid[u].arc);
                if (w < distv[u + 1] && w <= d + kChordEps) {
                    distv[u + 1] = w;
                    q.push({w, u + 1});
                }
            }
            for (auto [v, c] : chords[u]) {
                const double w = du + c;
                if (w < distv[v] && w <= d + kChordEps) {
                    distv[v] = w;
                    q.push({w, v});
                }
            }
        }
        for (std::size_t j = i + 1; j < m; ++j)
            hop[i][j] = distv[at[j]] <= d + kChordEps ? 1 : 0;
    }

    // Fewest hops from X[0] to the sentinel.
    std::vector<std::size_t> hops(m, static_cast<std::size_t>(-1));
    hops[0] = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (hops[i] == static_cast<std::size_t>(-1)) continue;
        for (std::size_t j = i + 1; j < m; ++j)
            if (hop[i][j] && hops[i] + 1 < hops[j]) hops[j] = hops[i] + 1;
    }
    return hops[m - 1] == static_cast<std::size_t>(-1) ? 0 : hops[m - 1];
}

bool brute_enclosure(const Polygon& P, const std::vector<Point2>& cycle) {
    if (cycle.size() < 2) return false;

    for (std::size_t h : P.hull) {
        const Point2 v = P.vertices[h];
        double best = 1e300;
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            best = std::min(best, seg_point_dist(v, cycle[i], cycle[(i + 1) % cycle.size()]));
            if (best <= 1e-6) break;
        }
        if (best > 1e-6) return false;
    }

    // Interior probe for the winding test.
    const double tol = 1e-9 * o_diag(P);
    Point2 probe{};
    bool found = false;
    const std::size_t n = P.size();
    for (std::size_t i = 0; i < n && !found; ++i) {
        const Point2 a = P.vertex(i);
        const Point2 b = P.vertex(i + 1);
        const Point2 c = P.vertex(i + 2);
        const Point2 q{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
        if (strictly_inside(P, q, tol)) {
            probe = q;
            found = true;
        }
    }
    for (std::size_t i = 0; i < n && !found; ++i) {
        const Point2 a = P.edge_start(i);
        const Point2 b = P.edge_end(i);
        const Point2 mid{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        const double len = o_dist(a, b);
        for (double s : {1e-3, -1e-3}) {
            const Point2 q{mid.x - (b.y - a.y) / len * s * o_diag(P),
                           mid.y + (b.x - a.x) / len * s * o_diag(P)};
            if (strictly_inside(P, q, tol)) {
                probe = q;
                found = true;
                break;
            }
        }
    }
    if (!found) return false;

    double total = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point2 a = cycle[i];
        const Point2 b = cycle[(i + 1) % cycle.size()];
        const double a1 = std::atan2(a.y - probe.y, a.x - probe.x);
        const double a2 = std::atan2(b.y - probe.y, b.x - probe.x);
        double da = a2 - a1;
        while (da > kPi) da -= 2.0 * kPi;
        while (da < -kPi) da += 2.0 * kPi;
        total += da;
    }
    const double winding = total / (2.0 * kPi);
    return std::abs(std::abs(winding) - 1.0) < 0.1;
}

} // namespace dhull::oracle
