#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dhull/geometry.hpp"

namespace dhull {

/// Outer ring of a geographic polygon, WGS84 (lon, lat) in degrees.
struct GeoPolygon {
    std::vector<std::pair<double, double>> ring;
};

/// Local equirectangular projection about a reference point:
///   x = R * cos(lat0) * dlon,  y = R * dlat   (angles in radians, R in m).
struct LocalProjection {
    double lon0 = 0.0; // degrees
    double lat0 = 0.0; // degrees

    Point2 forward(double lon_deg, double lat_deg) const;
    std::pair<double, double> inverse(Point2 p) const; // (lon, lat) degrees
};

/// Earth radius used by the projection, meters.
constexpr double kEarthRadius = 6371000.0;

/// Extract the first Polygon geometry's outer ring from a GeoJSON file
/// (Feature, FeatureCollection or bare Polygon). A closed ring (first ==
/// last) is deduplicated. Throws ParseError / NoPolygonFoundError.
GeoPolygon load_geojson(const std::string& path);

/// Projection centered on the ring centroid.
LocalProjection make_projection(const GeoPolygon& g);

/// Project about the ring centroid and validate.
Polygon project(const GeoPolygon& g);
Polygon project(const GeoPolygon& g, LocalProjection& proj_out);

/// Loaded CLI input: metric polygon plus the projection when the source was
/// geographic.
struct InputPolygon {
    Polygon polygon;
    std::optional<LocalProjection> projection;
};

/// Load either GeoJSON (WGS84) or plain JSON {"vertices": [[x,y],...]}
/// already in meters (no projection applied).
InputPolygon load_input(const std::string& path);

} // namespace dhull
