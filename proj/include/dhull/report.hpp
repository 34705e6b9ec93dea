#pragma once

#include <optional>
#include <string>

#include "dhull/certify.hpp"
#include "dhull/geojson.hpp"
#include "dhull/optsol.hpp"

namespace dhull {

/// Common header for every run report.
struct ReportMeta {
    std::string mode;      // appsol | appsol2 | optsol | certify | mindist
    double d = 0.0;        // meters
    double total_seconds = 0.0;
    std::optional<LocalProjection> projection; // set for geographic inputs
};

/// Serialize a run as JSON with a stable key order and 6-decimal floats:
/// {mode, d_m, epsilon_trace, k, certified, stations, hops, total_seconds}.
/// Throws IoError on write failure.
void write_report(const StationSolution& solution,
                  const std::vector<CertificationEntry>& trace, bool certified,
                  const ReportMeta& meta, const std::string& path);

void write_report(const CertificationReport& report, const ReportMeta& meta,
                  const std::string& path);

void write_report(const MinDistanceResult& result, const ReportMeta& meta,
                  const std::string& path);

/// Deterministic SVG: polygon outline in solid gray, the d-hull cycle as one
/// dashed black path, one filled circle per station, 5% viewBox margin.
void render_svg(const Polygon& P, const StationSolution& solution, const std::string& path);

} // namespace dhull
