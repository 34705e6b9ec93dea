#include <chrono>
#include <cstdio>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dhull/appsol.hpp"
#include "dhull/certify.hpp"
#include "dhull/geojson.hpp"
#include "dhull/optsol.hpp"
#include "dhull/oracle.hpp"
#include "dhull/report.hpp"

namespace {

using namespace dhull;

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

BoundaryPoint resolve_start(const Polygon& P, const std::string& spec) {
    if (spec == "auto") {
        if (P.hull.empty()) throw StartNotOnHullError("polygon has no hull vertices");
        return make_anchor_at_vertex(P, P.hull.front());
    }
    if (spec.find('.') == std::string::npos) {
        const auto idx = static_cast<std::size_t>(std::stoul(spec));
        if (idx >= P.size()) throw OutOfRangeError("vertex index out of range");
        return make_anchor_at_vertex(P, idx);
    }
    const double arc = std::stod(spec);
    const auto origin = make_anchor_at_vertex(P, 0);
    const auto at = point_at_arc(P, origin, arc);
    return make_anchor(P, at.edge, at.t);
}

void require_on_hull(const Polygon& P, const BoundaryPoint& s0) {
    if (!on_hull(P, s0.point))
        throw StartNotOnHullError("start station must lie on the convex hull boundary");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Base-station placement on a coastline polygon for range-limited drones"};
    app.require_subcommand(1);

    std::string input, report_path, svg_path, start_spec = "auto", algo = "appsol",
                epsilon_spec = "auto";
    double d = 0.0, mindist_eps = 0.0;
    std::size_t budget = 0;
    int fixed_start = -1;
    bool certify = false, discrete = false;

    auto* solve = app.add_subcommand("solve", "Minimize stations for a given flight range");
    solve->add_option("--input", input, "GeoJSON or {\"vertices\":[[x,y],...]} file")
        ->required();
    solve->add_option("--d", d, "flight range in meters")->required()->check(CLI::PositiveNumber);
    solve->add_option("--epsilon", epsilon_spec, "grid pitch in meters, or 'auto'");
    solve->add_option("--start", start_spec, "vertex index, arc value, or 'auto'");
    solve->add_option("--algo", algo, "appsol | appsol2 | optsol")
        ->check(CLI::IsMember({"appsol", "appsol2", "optsol"}));
    solve->add_flag("--certify", certify, "run the certification loop");
    solve->add_option("--report", report_path, "write a JSON report");
    solve->add_option("--svg", svg_path, "render the solution as SVG");

    auto* mindist = app.add_subcommand("mindist", "Minimize flight range for a station budget");
    mindist->add_option("--input", input)->required();
    mindist->add_option("--k", budget, "station budget")->required()
        ->check(CLI::PositiveNumber);
    mindist->add_option("--epsilon", mindist_eps, "additive tolerance (meters)")
        ->required()
        ->check(CLI::PositiveNumber);
    mindist->add_option("--fixed-start", fixed_start, "fix the start at a vertex index");
    mindist->add_flag("--discrete", discrete, "search candidate ranges instead of bisecting");
    mindist->add_option("--report", report_path, "write a JSON report");
    mindist->add_option("--svg", svg_path, "render the solution as SVG");

    auto* validate = app.add_subcommand("validate", "Polygon diagnostics");
    validate->add_option("--input", input)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const InputPolygon in = load_input(input);
        const Polygon& P = in.polygon;

        if (validate->parsed()) {
            std::printf("vertices: %zu\n", P.size());
            std::printf("perimeter: %.6f\n", P.perimeter);
            std::printf("hull vertices: %zu\n", P.hull.size());
            std::printf("lids: %zu\n", P.lids.size());
            for (const auto& lid : P.lids)
                std::printf("  lid (%.3f,%.3f)-(%.3f,%.3f), pocket of %zu vertices\n", lid.a.x,
                            lid.a.y, lid.b.x, lid.b.y, lid.chain.size());
            return 0;
        }

        const auto t0 = std::chrono::steady_clock::now();
        ReportMeta meta;
        meta.projection = in.projection;

        if (solve->parsed()) {
            const auto s0 = resolve_start(P, start_spec);
            require_on_hull(P, s0);
            meta.d = d;

            if (certify) {
                meta.mode = "certify";
                auto rep = auto_certify(P, s0, d);
                meta.total_seconds = seconds_since(t0);
                if (rep.certified())
                    std::printf("certified k=%zu (eps=%.6f, %zu iterations)\n",
                                *rep.k_certified, rep.trace.back().epsilon, rep.iterations);
                else
                    std::printf("not certified: k in [%zu, %zu] after %zu iterations\n",
                                rep.k_low(), rep.k_high(), rep.iterations);
                if (!report_path.empty()) write_report(rep, meta, report_path);
                if (!svg_path.empty()) render_svg(P, rep.solution, svg_path);
                return rep.certified() ? 0 : 2;
            }

            StationSolution sol;
            if (algo == "optsol") {
                sol = run_optsol(P, s0, d);
            } else {
                double eps = d / 10.0;
                if (epsilon_spec != "auto") eps = std::stod(epsilon_spec);
                sol = (algo == "appsol") ? run_appsol(P, s0, d, eps)
                                         : run_appsol2(P, s0, d, eps);
            }
            meta.mode = algo;
            meta.total_seconds = seconds_since(t0);
            std::printf("k=%zu stations, flight range %.6f\n", sol.k, d);
            if (!report_path.empty()) write_report(sol, {}, false, meta, report_path);
            if (!svg_path.empty()) render_svg(P, sol, svg_path);
            return 0;
        }

        // mindist
        BoundaryPoint s0 = (fixed_start >= 0)
                               ? make_anchor_at_vertex(P, static_cast<std::size_t>(fixed_start))
                               : resolve_start(P, "auto");
        require_on_hull(P, s0);
        const StartMode mode = (fixed_start >= 0) ? StartMode::fixed : StartMode::free;
        auto res = min_distance(P, s0, budget, mindist_eps, mode, discrete);
        meta.mode = "mindist";
        meta.d = res.d_star;
        meta.total_seconds = seconds_since(t0);
        std::printf("d_star=%.6f with k=%zu stations (budget %zu, eps=%.6f)\n", res.d_star,
                    res.solution.k, budget, mindist_eps);
        if (!report_path.empty()) write_report(res, meta, report_path);
        if (!svg_path.empty()) render_svg(P, res.solution, svg_path);
        return 0;
    } catch (const dhull::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
