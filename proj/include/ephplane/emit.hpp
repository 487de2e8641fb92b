#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "ephplane/curve.hpp"

namespace eph {

struct EmitConfig {
    std::filesystem::path out_dir = "out";
    bool csv = true;
    bool svg = false;
    /// Viewport half-extents; match the tuning bounds unless overridden.
    double ulim = 8.5;
    double vlim = 8.5;
    /// Pixels per plane unit in SVG output.
    double svg_scale = 40.0;
    /// Decimal digits for CSV coordinates.
    int precision = 9;
};

/// How a curve set is rendered in SVG; CSV rows are identical either way.
enum class CurveStyle { lines, arrows };

/// One row per point under the header
/// curve_id,segment_id,u,v,color_grade,subgroup,metric,variant.
/// Segment ids restart at 0 per curve and step by 1 at each break;
/// single-point segments are dropped. LF line ends, UTF-8.
void write_csv(const std::vector<Curve>& curves, std::ostream& out, const EmitConfig& cfg);
void write_csv(const std::vector<Curve>& curves, const std::filesystem::path& file,
               const EmitConfig& cfg);

/// Inverse of write_csv over its own output.
std::vector<Curve> read_csv(std::istream& in);
std::vector<Curve> read_csv(const std::filesystem::path& file);

/// One polyline per drawable segment, y axis flipped to mathematical
/// orientation, geometry clipped to the viewport. Stroke lightness grows
/// with color_grade; arrows are drawn as 60%-grey lines with head markers.
void write_svg(const std::vector<Curve>& curves, std::ostream& out, const EmitConfig& cfg,
               CurveStyle style = CurveStyle::lines);
void write_svg(const std::vector<Curve>& curves, const std::filesystem::path& file,
               const EmitConfig& cfg, CurveStyle style = CurveStyle::lines);

}  // namespace eph
