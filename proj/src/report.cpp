#include "dhull/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

#include <json.hpp>

namespace dhull {

namespace {

using ojson = nlohmann::ordered_json;

double r6(double v) { return std::round(v * 1e6) / 1e6; }

ojson station_json(const BoundaryPoint& s, const std::optional<LocalProjection>& proj) {
    ojson j;
    j["x"] = r6(s.point.x);
    j["y"] = r6(s.point.y);
    j["arc"] = r6(s.arc);
    if (proj) {
        const auto [lon, lat] = proj->inverse(s.point);
        j["lon"] = r6(lon);
        j["lat"] = r6(lat);
    }
    return j;
}

ojson hops_json(const StationSolution& sol) {
    ojson arr = ojson::array();
    for (std::size_t i = 0; i < sol.hops.size(); ++i) {
        const auto& hop = sol.hops[i];
        ojson h;
        h["from_idx"] = i;
        h["to_idx"] = (i + 1) % std::max<std::size_t>(sol.stations.size(), 1);
        h["length_m"] = r6(hop.total_length);
        ojson legs = ojson::array();
        if (!hop.legs.empty()) {
            legs.push_back({r6(hop.legs.front().from.x), r6(hop.legs.front().from.y)});
            for (const auto& leg : hop.legs) legs.push_back({r6(leg.to.x), r6(leg.to.y)});
        }
        h["legs"] = std::move(legs);
        arr.push_back(std::move(h));
    }
    return arr;
}

ojson trace_json(const std::vector<CertificationEntry>& trace) {
    ojson arr = ojson::array();
    for (const auto& e : trace) {
        ojson t;
        t["eps"] = r6(e.epsilon);
        t["alpha_d"] = e.alpha_d;
        t["alpha_d_plus_eps"] = e.alpha_d_plus;
        t["seconds"] = r6(e.seconds);
        arr.push_back(std::move(t));
    }
    return arr;
}

void write_json(const ojson& doc, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("failed writing " + path);
}

} // namespace

void write_report(const StationSolution& solution,
                  const std::vector<CertificationEntry>& trace, bool certified,
                  const ReportMeta& meta, const std::string& path) {
    ojson doc;
    doc["mode"] = meta.mode;
    doc["d_m"] = r6(meta.d);
    if (meta.projection) doc["projection"] = "equirectangular local (R=6371000 m)";
    doc["epsilon_trace"] = trace_json(trace);
    doc["k"] = solution.k;
    doc["certified"] = certified;
    ojson stations = ojson::array();
    for (const auto& s : solution.stations) stations.push_back(station_json(s, meta.projection));
    doc["stations"] = std::move(stations);
    doc["hops"] = hops_json(solution);
    doc["total_seconds"] = r6(meta.total_seconds);
    write_json(doc, path);
}

void write_report(const CertificationReport& report, const ReportMeta& meta,
                  const std::string& path) {
    write_report(report.solution, report.trace, report.certified(), meta, path);
}

void write_report(const MinDistanceResult& result, const ReportMeta& meta,
                  const std::string& path) {
    ReportMeta m = meta;
    m.d = result.d_star;
    write_report(result.solution, {}, false, m, path);
}

void render_svg(const Polygon& P, const StationSolution& solution, const std::string& path) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto grow = [&](Point2 p) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    };
    for (const auto& v : P.vertices) grow(v);
    const auto cycle = solution.cycle_polyline();
    for (const auto& p : cycle) grow(p);

    const double w = std::max(xmax - xmin, 1e-9);
    const double h = std::max(ymax - ymin, 1e-9);
    const double margin = 0.05 * std::max(w, h);
    const double stroke = std::max(w, h) / 400.0;
    const double radius = stroke * 3.0;
    // SVG y axis points down; flip about the box midline.
    const double ysum = ymin + ymax;

    std::string svg;
    char buf[256];
    auto emit = [&](const char* fmt, auto... args) {
        std::snprintf(buf, sizeof buf, fmt, args...);
        svg += buf;
    };

    emit("<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"%.6f %.6f %.6f %.6f\">\n",
         xmin - margin, ymin - margin, w + 2 * margin, h + 2 * margin);

    svg += "  <path fill=\"none\" stroke=\"#808080\" stroke-width=\"";
    emit("%.6f\" d=\"", stroke);
    for (std::size_t i = 0; i < P.size(); ++i)
        emit("%c%.6f %.6f ", i == 0 ? 'M' : 'L', P.vertices[i].x, ysum - P.vertices[i].y);
    svg += "Z\"/>\n";

    if (!cycle.empty()) {
        svg += "  <path fill=\"none\" stroke=\"black\" stroke-dasharray=\"";
        emit("%.6f %.6f\" stroke-width=\"%.6f\" d=\"", 4 * stroke, 4 * stroke, 1.2 * stroke);
        for (std::size_t i = 0; i < cycle.size(); ++i)
            emit("%c%.6f %.6f ", i == 0 ? 'M' : 'L', cycle[i].x, ysum - cycle[i].y);
        svg += "Z\"/>\n";
    }

    for (const auto& s : solution.stations)
        emit("  <circle cx=\"%.6f\" cy=\"%.6f\" r=\"%.6f\" fill=\"black\"/>\n", s.point.x,
             ysum - s.point.y, radius);

    svg += "</svg>\n";

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << svg;
    if (!out) throw IoError("failed writing " + path);
}

} // namespace dhull
