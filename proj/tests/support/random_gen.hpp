#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "dhull/geometry.hpp"

namespace testgen {

/// Random star-shaped simple polygon: vertices at sorted random angles with
/// random radii around the origin. Always simple; concavities appear whenever
/// consecutive radii differ enough.
inline dhull::Polygon random_simple_polygon(std::mt19937_64& rng, std::size_t n,
                                            double r_min = 0.4, double r_max = 1.6) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
    std::uniform_real_distribution<double> radius(r_min, r_max);
    for (;;) {
        std::vector<double> ang(n);
        for (auto& a : ang) a = angle(rng);
        std::sort(ang.begin(), ang.end());
        bool distinct = true;
        for (std::size_t i = 0; i + 1 < n; ++i)
            if (ang[i + 1] - ang[i] < 1e-3) distinct = false;
        if (!distinct) continue;
        std::vector<dhull::Point2> pts(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double r = radius(rng);
            pts[i] = {r * std::cos(ang[i]), r * std::sin(ang[i])};
        }
        try {
            return dhull::validate_polygon(pts);
        } catch (const dhull::Error&) {
            continue; // rare degenerate draw, retry
        }
    }
}

/// Random convex polygon with up to n vertices (hull of random points).
inline dhull::Polygon random_convex_polygon(std::mt19937_64& rng, std::size_t n,
                                            double scale = 1.0) {
    std::uniform_real_distribution<double> coord(-scale, scale);
    for (;;) {
        std::vector<dhull::Point2> pts(std::max<std::size_t>(n * 2, 8));
        for (auto& p : pts) p = {coord(rng), coord(rng)};
        auto hull = dhull::detail::convex_hull_points(pts);
        if (hull.size() < 3) continue;
        if (hull.size() > n) hull.resize(n); // keep it small; still convex? not necessarily
        try {
            auto P = dhull::validate_polygon(hull);
            if (P.lids.empty()) return P; // truncation can break convexity; require none
        } catch (const dhull::Error&) {
        }
    }
}

/// Star gadget: k tips on a circle with shallow valleys between consecutive
/// tips. Tip spacing (the hull edge length) equals `tip_spacing`. The valley
/// depth is chosen so a chord between adjacent tips clears the valley but a
/// chord skipping a tip cuts into the polygon, and so the valley walls run
/// nearly parallel to the tip-to-tip bridges.
inline dhull::Polygon star_gadget(std::size_t k, double tip_spacing) {
    const double pi = 3.14159265358979323846;
    const double kk = static_cast<double>(k);
    const double R = tip_spacing / (2.0 * std::sin(pi / kk));
    const double margin = R * std::sin(pi / kk) * std::sin(pi / kk) / std::cos(pi / kk);
    const double r_valley = R * std::cos(pi / kk) - 0.3 * margin;
    std::vector<dhull::Point2> pts;
    pts.reserve(2 * k);
    for (std::size_t i = 0; i < k; ++i) {
        const double a_tip = -2.0 * pi * static_cast<double>(i) / kk;
        const double a_val = a_tip - pi / kk;
        pts.push_back({R * std::cos(a_tip), R * std::sin(a_tip)});
        pts.push_back({r_valley * std::cos(a_val), r_valley * std::sin(a_val)});
    }
    return dhull::validate_polygon(pts);
}

} // namespace testgen
