#include "dhull/certify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>

namespace dhull {

namespace {

double now_seconds() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

std::size_t cycle_count(const Polygon& P, const BoundaryPoint& s0, double d, double eps) {
    return run_appsol(P, s0, d, eps).k;
}

} // namespace

std::size_t alpha(const Polygon& P, const BoundaryPoint& s0, double d, double eps) {
    return cycle_count(P, s0, d, eps);
}

CertifyAtResult certify_at(const Polygon& P, const BoundaryPoint& s0, double d, double eps) {
    CertifyAtResult r;
    r.k_high = alpha(P, s0, d, eps);
    r.k_low = alpha(P, s0, d + eps, eps);
    r.certified = (r.k_low == r.k_high);
    return r;
}

CertificationReport auto_certify(const Polygon& P, const BoundaryPoint& s0, double d,
                                 double eps_min, std::size_t max_iter) {
    if (!(d > 0.0)) throw OutOfRangeError("flight range must be positive");
    if (eps_min <= 0.0) eps_min = d * 1e-4;

    CertificationReport report;
    report.d = d;
    double eps = d;
    for (std::size_t it = 0; it < max_iter && eps >= eps_min; ++it) {
        const double t0 = now_seconds();
        const auto r = certify_at(P, s0, d, eps);
        const double t1 = now_seconds();
        report.trace.push_back({eps, r.k_high, r.k_low, t1 - t0});
        ++report.iterations;
        if (r.certified) {
            report.k_certified = r.k_high;
            break;
        }
        eps /= 1.2;
    }
    if (!report.trace.empty())
        report.solution = run_appsol(P, s0, d, report.trace.back().epsilon);
    return report;
}

MinDistanceResult min_distance(const Polygon& P, const BoundaryPoint& s0, std::size_t k,
                               double eps, StartMode mode, bool discrete) {
    if (k < 1) throw InfeasibleBudgetError("station budget must be at least 1");
    if (!(eps > 0.0)) throw EpsilonNonPositiveError("tolerance must be positive");

    auto solve = [&](double d) -> std::optional<StationSolution> {
        try {
            StationSolution sol = (mode == StartMode::fixed) ? run_appsol(P, s0, d, eps)
                                                             : run_appsol2(P, s0, d, eps);
            if (sol.k <= k) return sol;
            return std::nullopt;
        } catch (const DisconnectedError&) {
            return std::nullopt;
        }
    };

    // The full boundary cycle is always feasible for k >= 1.
    const BoundaryPoint send = make_sentinel(P, s0);
    double hi = shortest_d_path(P, s0, send, P.perimeter).total_length;
    auto hi_sol = solve(hi);
    if (!hi_sol) {
        hi = P.perimeter;
        hi_sol = solve(hi);
        if (!hi_sol) throw InfeasibleBudgetError("budget cannot enclose at full cycle length");
    }

    MinDistanceResult res;
    res.k = k;
    res.epsilon = eps;

    if (discrete) {
        // Candidate ranges: pairwise grid geodesic distances (the threshold
        // is always one of them).
        const auto X = discretize(P, s0, eps);
        const auto G = build_reach_graph(P, X, hi);
        std::vector<double> cand;
        const std::size_t nc = G.node_count;
        std::vector<double> row;
        for (std::size_t i = 0; i + 1 < nc; ++i) {
            // Budgetless sweep bounded by hi.
            row.assign(nc, std::numeric_limits<double>::infinity());
            row[i] = 0.0;
            for (std::size_t u = i; u < nc; ++u) {
                if (row[u] > hi) continue;
                for (const auto& e : G.H.adj[u])
                    row[e.to] = std::min(row[e.to], row[u] + e.weight);
            }
            for (std::size_t j = i + 1; j < nc; ++j)
                if (row[j] <= hi) cand.push_back(row[j]);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::size_t lo_i = 0, hi_i = cand.size(); // first feasible index search
        while (lo_i < hi_i) {
            const std::size_t mid = lo_i + (hi_i - lo_i) / 2;
            if (solve(cand[mid])) hi_i = mid;
            else lo_i = mid + 1;
        }
        const double d_star = (lo_i < cand.size()) ? cand[lo_i] : hi;
        res.d_star = d_star;
        auto sol = solve(d_star);
        res.solution = sol ? *sol : *hi_sol;
        return res;
    }

    double lo = 0.0;
    StationSolution best = *hi_sol;
    const double gap_target = std::max(eps * 1e-3, 1e-12 * P.perimeter);
    for (int it = 0; it < 200 && hi - lo > gap_target; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (auto sol = solve(mid)) {
            hi = mid;
            best = std::move(*sol);
        } else {
            lo = mid;
        }
    }
    res.d_star = hi;
    res.solution = std::move(best);
    return res;
}

} // namespace dhull
