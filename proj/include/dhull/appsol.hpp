#pragma once

#include <cstdint>
#include <vector>

#include "dhull/exterior_paths.hpp"
#include "dhull/geometry.hpp"
#include "dhull/optsol.hpp"

namespace dhull {

/// Boundary discretization: s0 plus all polygon vertices plus per-edge equal
/// subdivision into ceil(len/eps) pieces, in increasing boundary order.
/// The sentinel copy of s0 (arc = L) is kept separately.
struct Discretization {
    std::vector<BoundaryPoint> points; // x_0 = s0 first
    BoundaryPoint sentinel;
    double epsilon = 0.0;
};

/// Directed geodesic graph H_d(X): nodes are X plus the sentinel (last
/// index); E1 connects boundary-consecutive points, E2 are exterior flight
/// chords of length <= d. All edges point forward in boundary order.
struct GeodesicGraph {
    struct Edge {
        std::uint32_t to = 0;
        bool bridge = false;
        double weight = 0.0;
    };
    std::size_t node_count = 0; // |X| + 1
    std::vector<std::vector<Edge>> adj;
    double d = 0.0;
};

/// Hop graph G_d(X): x_i ~ x_j iff some directed H-path between them has
/// weight <= d. The adjacency matrix is materialized only for small grids;
/// on large grids adjacency is answered by an on-demand sweep over H.
struct ReachGraph {
    Discretization X;
    GeodesicGraph H;
    std::size_t node_count = 0;
    bool dense = false;
    std::vector<char> adj; // adj[i * node_count + j], i < j, when dense

    bool adjacent(std::size_t i, std::size_t j) const;
};

/// Algorithm inputs must satisfy eps > 0; throws EpsilonNonPositiveError.
Discretization discretize(const Polygon& P, const BoundaryPoint& s0, double eps);

/// Build H_d(X), run one budgeted shortest-path sweep per source, and
/// assemble the hop graph.
ReachGraph build_reach_graph(const Polygon& P, const Discretization& X, double d);

/// Fewest-hops station chain from x_0 to the sentinel (BFS). Returns the
/// stations (path nodes excluding the sentinel). Throws DisconnectedError
/// when the sentinel is unreachable (d too small for this grid).
std::vector<BoundaryPoint> shortest_cycle(const ReachGraph& G);

/// Discretized solver: stations on the grid, hops realized as H-graph
/// shortest paths.
StationSolution run_appsol(const Polygon& P, const BoundaryPoint& s0, double d, double eps);

/// All-starts variant: minimum over admissible starts x_i (drone distance
/// from x_0 at most d + eps/2) of the shortest cycle from x_i around to its
/// own sentinel.
StationSolution run_appsol2(const Polygon& P, const BoundaryPoint& s0, double d, double eps);

} // namespace dhull
