#pragma once

#include <vector>

#include "dhull/geometry.hpp"

namespace dhull::oracle {

/// Brute-force references used by tests. Deliberately simple and independent
/// of the solver modules: all geometric predicates here are local to this
/// module.

/// Length of the shortest clockwise path from a to b whose legs are boundary
/// pieces or over-water chords of length <= d each, computed by Dijkstra over
/// a dense boundary grid of the clockwise interval [a, b] at the given pitch.
/// All polygon vertices in the interval are grid points.
double brute_geodesic(const Polygon& P, const BoundaryPoint& a, const BoundaryPoint& b,
                      double d, double pitch);

/// Minimum number of hops from X.front() to the sentinel (X.back(), arc = L)
/// where a hop i -> j (i < j) is allowed iff the dense-grid geodesic from
/// x_i to x_j is at most d. X must be in increasing arc order with the
/// sentinel last. Returns 0 when the sentinel is unreachable.
std::size_t brute_min_cycle(const Polygon& P, const std::vector<BoundaryPoint>& X, double d);

/// True iff every strict hull corner of P lies on the closed cycle polyline
/// within 1e-6 and the cycle winds exactly once around an interior point.
/// The polyline is closed implicitly (last point connects to the first).
bool brute_enclosure(const Polygon& P, const std::vector<Point2>& cycle);

} // namespace dhull::oracle
