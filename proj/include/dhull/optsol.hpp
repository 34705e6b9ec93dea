#pragma once

#include <optional>
#include <vector>

#include "dhull/exterior_paths.hpp"
#include "dhull/geometry.hpp"

namespace dhull {

enum class CandidateKind {
    vertex,
    vertex_projection,
    edge_d_projection_fwd,
    edge_d_projection_bwd,
    max_reach,
};

struct Candidate {
    BoundaryPoint point;
    CandidateKind kind = CandidateKind::vertex;
    std::optional<Point2> partner; // other bridge endpoint for projections
};

struct TwoHopResult {
    BoundaryPoint s_next;
    BoundaryPoint y_next; // frontier: the farthest 2-hop point
};

/// A closed station tour: stations in increasing boundary order starting at
/// s0, one hop path per consecutive pair plus the closing hop back to the
/// sentinel copy of s0.
struct StationSolution {
    std::vector<BoundaryPoint> stations;
    std::vector<DPath> hops;
    std::size_t k = 0;
    double d = 0.0;

    /// Flattened closed polyline of all hop legs (for enclosure checks and
    /// rendering); last point equals the first.
    std::vector<Point2> cycle_polyline() const;
};

/// The farthest boundary point (max under the order anchored at x) reachable
/// from x by a single hop of range d. Returns the sentinel when the whole
/// remaining boundary is within reach.
BoundaryPoint max_reach(const Polygon& P, const BoundaryPoint& x, double d);

/// Pocket candidate: the minimal foot on edge e of a perpendicular d-bridge
/// from a later vertex (at most one per edge).
std::vector<Candidate> vertex_projections(const Polygon& P, std::size_t e, double d,
                                          const BoundaryPoint& s0);

/// Pocket candidates from perpendicular bridges of length exactly d between
/// edge e and another edge of the same pocket (at most two per edge: the
/// minimal foot from a later edge, and the bridge endpoint on e generating
/// the maximal foot on a later edge).
std::vector<Candidate> edge_d_projections(const Polygon& P, std::size_t e, double d,
                                          const BoundaryPoint& s0);

/// One step of the exact greedy: the relay station s_next reachable from
/// s_prev that pushes the 2-hop frontier y_next farthest.
TwoHopResult two_hop_step(const Polygon& P, const BoundaryPoint& s_prev, double d);

/// Exact greedy solver: minimum stations among all solutions containing s0
/// (s0 must lie on the convex hull); globally optimal or optimal+1.
StationSolution run_optsol(const Polygon& P, const BoundaryPoint& s0, double d);

} // namespace dhull
