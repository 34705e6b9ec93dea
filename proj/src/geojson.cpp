#include "dhull/geojson.hpp"

#include <cmath>
#include <fstream>

#include <json.hpp>

namespace dhull {

namespace {

constexpr double kDegToRad = 3.14159265358979323846 / 180.0;

using json = nlohmann::json;

std::optional<GeoPolygon> ring_from_geometry(const json& geom) {
    if (!geom.is_object() || !geom.contains("type")) return std::nullopt;
    if (geom["type"] != "Polygon") return std::nullopt;
    if (!geom.contains("coordinates") || !geom["coordinates"].is_array() ||
        geom["coordinates"].empty())
        return std::nullopt;
    const auto& outer = geom["coordinates"][0];
    GeoPolygon g;
    for (const auto& pt : outer) {
        if (!pt.is_array() || pt.size() < 2) return std::nullopt;
        g.ring.emplace_back(pt[0].get<double>(), pt[1].get<double>());
    }
    // Closed rings repeat the first coordinate.
    if (g.ring.size() > 1 && g.ring.front() == g.ring.back()) g.ring.pop_back();
    return g;
}

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return doc;
}

} // namespace

Point2 LocalProjection::forward(double lon_deg, double lat_deg) const {
    const double dlon = (lon_deg - lon0) * kDegToRad;
    const double dlat = (lat_deg - lat0) * kDegToRad;
    return {kEarthRadius * std::cos(lat0 * kDegToRad) * dlon, kEarthRadius * dlat};
}

std::pair<double, double> LocalProjection::inverse(Point2 p) const {
    const double dlon = p.x / (kEarthRadius * std::cos(lat0 * kDegToRad));
    const double dlat = p.y / kEarthRadius;
    return {lon0 + dlon / kDegToRad, lat0 + dlat / kDegToRad};
}

GeoPolygon load_geojson(const std::string& path) {
    const json doc = parse_file(path);
    if (!doc.is_object() || !doc.contains("type"))
        throw ParseError("not a GeoJSON document: " + path);

    const std::string type = doc["type"].get<std::string>();
    if (type == "Polygon") {
        if (auto g = ring_from_geometry(doc)) return *g;
    } else if (type == "Feature") {
        if (doc.contains("geometry"))
            if (auto g = ring_from_geometry(doc["geometry"])) return *g;
    } else if (type == "FeatureCollection") {
        if (doc.contains("features"))
            for (const auto& f : doc["features"])
                if (f.is_object() && f.contains("geometry"))
                    if (auto g = ring_from_geometry(f["geometry"])) return *g;
    } else if (type == "GeometryCollection") {
        if (doc.contains("geometries"))
            for (const auto& geom : doc["geometries"])
                if (auto g = ring_from_geometry(geom)) return *g;
    }
    throw NoPolygonFoundError("no Polygon geometry in " + path);
}

LocalProjection make_projection(const GeoPolygon& g) {
    LocalProjection proj;
    if (g.ring.empty()) return proj;
    double lon = 0.0, lat = 0.0;
    for (const auto& [lo, la] : g.ring) {
        lon += lo;
        lat += la;
    }
    proj.lon0 = lon / static_cast<double>(g.ring.size());
    proj.lat0 = lat / static_cast<double>(g.ring.size());
    return proj;
}

Polygon project(const GeoPolygon& g, LocalProjection& proj_out) {
    proj_out = make_projection(g);
    std::vector<Point2> pts;
    pts.reserve(g.ring.size());
    for (const auto& [lon, lat] : g.ring) pts.push_back(proj_out.forward(lon, lat));
    return validate_polygon(pts);
}

Polygon project(const GeoPolygon& g) {
    LocalProjection proj;
    return project(g, proj);
}

InputPolygon load_input(const std::string& path) {
    const json doc = parse_file(path);
    InputPolygon input;
    if (doc.is_object() && doc.contains("vertices")) {
        std::vector<Point2> pts;
        for (const auto& pt : doc["vertices"]) {
            if (!pt.is_array() || pt.size() < 2)
                throw ParseError("vertices entries must be [x, y] pairs");
            pts.push_back({pt[0].get<double>(), pt[1].get<double>()});
        }
        input.polygon = validate_polygon(pts);
        return input;
    }
    const GeoPolygon g = load_geojson(path);
    LocalProjection proj;
    input.polygon = project(g, proj);
    input.projection = proj;
    return input;
}

} // namespace dhull
