#include "ephplane/emit.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "ephplane/errors.hpp"

namespace eph {

namespace {

constexpr std::string_view kCsvHeader = "curve_id,segment_id,u,v,color_grade,subgroup,metric,variant";

Subgroup subgroup_from_letter(char c) {
    switch (c) {
        case 'A': return Subgroup::A;
        case 'N': return Subgroup::N;
        case 'K': return Subgroup::K;
    }
    throw IoError(std::string("unknown subgroup letter: ") + c);
}

MetricKind kind_from_letter(char c) {
    switch (c) {
        case 'e': return MetricKind::elliptic;
        case 'p': return MetricKind::parabolic;
        case 'h': return MetricKind::hyperbolic;
    }
    throw IoError(std::string("unknown metric letter: ") + c);
}

MoebiusVariant variant_from_name(std::string_view name) {
    for (MoebiusVariant v : kAllVariants) {
        if (variant_name(v) == name) return v;
    }
    throw IoError("unknown variant name: " + std::string(name));
}

double parse_double(std::string_view text, const char* what) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw IoError(std::string("bad ") + what + " field: " + std::string(text));
    }
    return value;
}

int parse_int(std::string_view text, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw IoError(std::string("bad ") + what + " field: " + std::string(text));
    }
    return value;
}

}  // namespace

void write_csv(const std::vector<Curve>& curves, std::ostream& out, const EmitConfig& cfg) {
    out << kCsvHeader << '\n';
    char row[192];
    for (const Curve& curve : curves) {
        int segment_id = 0;
        for (const CurveSegment& segment : curve.drawable()) {
            for (const PlanePoint& p : segment.points) {
                std::snprintf(row, sizeof row, "%d,%d,%.*f,%.*f,%.*f,%c,%c,%s\n",
                              curve.meta.curve_id, segment_id, cfg.precision, p.u, cfg.precision,
                              p.v, cfg.precision, curve.meta.color_grade,
                              subgroup_letter(curve.meta.subgroup), metric_letter(curve.meta.kind),
                              std::string(variant_name(curve.meta.variant)).c_str());
                out << row;
            }
            ++segment_id;
        }
    }
}

void write_csv(const std::vector<Curve>& curves, const std::filesystem::path& file,
               const EmitConfig& cfg) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    write_csv(curves, out, cfg);
    out.flush();
    if (!out) throw IoError("write failed: " + file.string());
}

std::vector<Curve> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw IoError("missing or malformed CSV header");
    }
    std::vector<Curve> curves;
    Curve* current = nullptr;
    int current_segment = -1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::array<std::string_view, 8> fields;
        std::string_view rest(line);
        for (std::size_t i = 0; i < fields.size(); ++i) {
            const auto comma = rest.find(',');
            if (i + 1 < fields.size()) {
                if (comma == std::string_view::npos) throw IoError("short CSV row: " + line);
                fields[i] = rest.substr(0, comma);
                rest.remove_prefix(comma + 1);
            } else {
                if (comma != std::string_view::npos) throw IoError("long CSV row: " + line);
                fields[i] = rest;
            }
        }
        const int curve_id = parse_int(fields[0], "curve_id");
        const int segment_id = parse_int(fields[1], "segment_id");
        if (fields[5].size() != 1 || fields[6].size() != 1) throw IoError("bad tag field: " + line);
        CurveMeta meta{subgroup_from_letter(fields[5][0]), kind_from_letter(fields[6][0]),
                       variant_from_name(fields[7]), parse_double(fields[4], "color_grade"),
                       curve_id};
        if (current == nullptr || !(current->meta == meta)) {
            curves.emplace_back();
            current = &curves.back();
            current->meta = meta;
            current_segment = -1;
        }
        if (segment_id != current_segment) {
            current->segments.emplace_back();
            current_segment = segment_id;
        }
        current->segments.back().points.push_back(
            {parse_double(fields[2], "u"), parse_double(fields[3], "v")});
    }
    return curves;
}

std::vector<Curve> read_csv(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + file.string());
    return read_csv(in);
}

namespace {

// grade 0 draws black, the top grade 1.2 a light grey that stays visible.
int stroke_level(double grade) {
    const double clamped = std::clamp(grade, 0.0, 1.2);
    return static_cast<int>(std::lround(212.0 * clamped / 1.2));
}

std::string format_px(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", value);
    return buf;
}

}  // namespace

void write_svg(const std::vector<Curve>& curves, std::ostream& out, const EmitConfig& cfg,
               CurveStyle style) {
    const double width = 2.0 * cfg.ulim * cfg.svg_scale;
    const double height = 2.0 * cfg.vlim * cfg.svg_scale;
    const auto tx = [&](double u) { return (u + cfg.ulim) * cfg.svg_scale; };
    const auto ty = [&](double v) { return (cfg.vlim - v) * cfg.svg_scale; };

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_px(width)
        << "\" height=\"" << format_px(height) << "\" viewBox=\"0 0 " << format_px(width) << ' '
        << format_px(height) << "\">\n";
    out << "<defs>\n<clipPath id=\"viewport\"><rect x=\"0\" y=\"0\" width=\"" << format_px(width)
        << "\" height=\"" << format_px(height) << "\"/></clipPath>\n";
    if (style == CurveStyle::arrows) {
        out << "<marker id=\"head\" orient=\"auto\" markerWidth=\"6\" markerHeight=\"6\" "
               "refX=\"4\" refY=\"2\"><path d=\"M0,0 L4,2 L0,4\" fill=\"none\" "
               "stroke=\"rgb(153,153,153)\"/></marker>\n";
    }
    out << "</defs>\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<g clip-path=\"url(#viewport)\" fill=\"none\" stroke-width=\"1\">\n";

    for (const Curve& curve : curves) {
        std::string stroke;
        if (style == CurveStyle::arrows) {
            stroke = "rgb(153,153,153)";  // the 0.6 grey of the arrow grids
        } else {
            const int level = stroke_level(curve.meta.color_grade);
            stroke = "rgb(" + std::to_string(level) + ',' + std::to_string(level) + ',' +
                     std::to_string(level) + ')';
        }
        for (const CurveSegment& segment : curve.drawable()) {
            if (style == CurveStyle::arrows && segment.points.size() == 2) {
                out << "<line x1=\"" << format_px(tx(segment.points[0].u)) << "\" y1=\""
                    << format_px(ty(segment.points[0].v)) << "\" x2=\""
                    << format_px(tx(segment.points[1].u)) << "\" y2=\""
                    << format_px(ty(segment.points[1].v)) << "\" stroke=\"" << stroke
                    << "\" marker-end=\"url(#head)\"/>\n";
                continue;
            }
            out << "<polyline stroke=\"" << stroke << "\" points=\"";
            bool first = true;
            for (const PlanePoint& p : segment.points) {
                if (!first) out << ' ';
                first = false;
                out << format_px(tx(p.u)) << ',' << format_px(ty(p.v));
            }
            out << "\"/>\n";
        }
    }
    out << "</g>\n</svg>\n";
}

void write_svg(const std::vector<Curve>& curves, const std::filesystem::path& file,
               const EmitConfig& cfg, CurveStyle style) {
    std::ofstream out(file, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + file.string());
    write_svg(curves, out, cfg, style);
    out.flush();
    if (!out) throw IoError("write failed: " + file.string());
}

}  // namespace eph
