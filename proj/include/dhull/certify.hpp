#pragma once

#include <optional>
#include <vector>

#include "dhull/appsol.hpp"
#include "dhull/geometry.hpp"
#include "dhull/optsol.hpp"

namespace dhull {

struct CertificationEntry {
    double epsilon = 0.0;
    std::size_t alpha_d = 0;        // station count at range d
    std::size_t alpha_d_plus = 0;   // station count at range d + epsilon
    double seconds = 0.0;
};

struct CertificationReport {
    double d = 0.0;
    std::vector<CertificationEntry> trace;
    std::optional<std::size_t> k_certified;
    std::size_t iterations = 0;
    StationSolution solution; // solution at range d from the last iteration

    bool certified() const { return k_certified.has_value(); }
    std::size_t k_low() const { return trace.empty() ? 0 : trace.back().alpha_d_plus; }
    std::size_t k_high() const { return trace.empty() ? 0 : trace.back().alpha_d; }
};

struct MinDistanceResult {
    std::size_t k = 0;        // station budget
    double d_star = 0.0;      // smallest feasible tested range
    double epsilon = 0.0;     // additive tolerance (also the grid pitch)
    StationSolution solution; // solution at d_star
};

/// Station count of the discretized solver at range d and pitch eps.
std::size_t alpha(const Polygon& P, const BoundaryPoint& s0, double d, double eps);

/// Bracket check at one epsilon: (certified, k_low, k_high) with
/// k_low = alpha(d + eps, eps) and k_high = alpha(d, eps).
struct CertifyAtResult {
    bool certified = false;
    std::size_t k_low = 0;
    std::size_t k_high = 0;
};
CertifyAtResult certify_at(const Polygon& P, const BoundaryPoint& s0, double d, double eps);

/// Certification loop: start at eps = d, divide by 1.2 until the bracket
/// closes, eps < eps_min, or max_iter iterations. The report is returned in
/// all cases; certified() tells whether the bracket closed.
CertificationReport auto_certify(const Polygon& P, const BoundaryPoint& s0, double d,
                                 double eps_min = -1.0, std::size_t max_iter = 60);

enum class StartMode { fixed, free };

/// Additive eps-approximation of the smallest range for k stations, by
/// bisection on d (or a discrete search over candidate ranges).
MinDistanceResult min_distance(const Polygon& P, const BoundaryPoint& s0, std::size_t k,
                               double eps, StartMode mode, bool discrete = false);

} // namespace dhull
