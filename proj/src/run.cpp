#include "ephplane/run.hpp"

#include <cstdio>
#include <filesystem>
#include <ostream>
#include <string>

#include "ephplane/errors.hpp"

namespace eph {

namespace {

struct Emitter {
    const RunOptions& options;
    RunReport& report;

    void emit(const std::vector<Curve>& curves, const std::string& stem,
              CurveStyle style = CurveStyle::lines) const {
        if (options.emit.csv) write_one(curves, stem + ".csv", style);
        if (options.emit.svg) write_one(curves, stem + ".svg", style);
    }

private:
    void write_one(const std::vector<Curve>& curves, const std::string& name,
                   CurveStyle style) const {
        const auto path = options.emit.out_dir / name;
        if (name.ends_with(".csv")) {
            write_csv(curves, path, options.emit);
        } else {
            write_svg(curves, path, options.emit, style);
        }
        report.files.push_back(name);
    }
};

std::string file_stem(const char* mode, Subgroup s, MetricKind kind) {
    std::string stem = mode;
    stem += '-';
    stem += subgroup_letter(s);
    stem += '-';
    stem += metric_letter(kind);
    return stem;
}

bool selected(const RunOptions& options, Subgroup s) {
    return !options.subgroup || *options.subgroup == s;
}

bool selected(const RunOptions& options, MetricKind kind) {
    return !options.kind || *options.kind == kind;
}

void collect_checks(const OrbitBundle& bundle, RunReport& report) {
    for (const auto& check : bundle.focal_checks) {
        report.focal_checks.push_back(check);
        if (!check.passes()) report.checks_ok = false;
    }
    if (bundle.kind == MetricKind::hyperbolic && bundle.subgroup == Subgroup::K &&
        !bundle.focal_checks.empty() && !any_sign_flip(bundle.focal_checks)) {
        report.checks_ok = false;
    }
    for (const auto& fits : bundle.parabola_fits) {
        report.parabola_fits.push_back({bundle.subgroup, fits});
    }
    for (const auto& row : vertex_checks(bundle)) {
        report.vertex_checks.push_back(row);
        if (!row.ok) report.checks_ok = false;
    }
}

}  // namespace

RunReport run(const RunOptions& options) {
    RunReport report;
    const bool writes_files = options.mode != RunMode::checks;
    if (writes_files) {
        std::error_code ec;
        std::filesystem::create_directories(options.emit.out_dir, ec);
        if (ec) throw IoError("cannot create output directory: " + options.emit.out_dir.string());
    }
    Emitter emitter{options, report};

    const bool want_orbits = options.mode == RunMode::orbits || options.mode == RunMode::all;
    const bool want_transverses =
        options.mode == RunMode::transverses || options.mode == RunMode::all;
    const bool want_arrows = options.mode == RunMode::arrows || options.mode == RunMode::all;
    const bool want_checks = options.mode == RunMode::checks;

    for (MetricKind kind : kAllKinds) {
        if (!selected(options, kind)) continue;
        for (Subgroup s : kAllSubgroups) {
            if (!selected(options, s)) continue;

            if (want_arrows) {
                const auto field = generate_arrows(s, kind, options.tables, options.exec);
                report.singular_nodes += field.singular_skipped;
                emitter.emit(arrow_curves(field), file_stem("arrows", s, kind),
                             CurveStyle::arrows);
            }
            if (want_orbits) {
                auto bundle = generate_orbits(s, kind, options.tables, options.exec);
                report.singular_nodes += bundle.singular_nodes;
                report.segment_breaks += bundle.segment_breaks;
                collect_checks(bundle, report);
                emitter.emit(bundle.direct, file_stem("orbit", s, kind));
                emitter.emit(bundle.cayley, file_stem("cayley", s, kind));
                emitter.emit(bundle.cayley_alt, file_stem("cayl-a", s, kind));
            } else if (want_checks &&
                       (s == Subgroup::K ||
                        (s == Subgroup::A && kind == MetricKind::parabolic) ||
                        (s == Subgroup::N && kind == MetricKind::parabolic))) {
                const auto bundle = generate_orbits(s, kind, options.tables, options.exec);
                report.singular_nodes += bundle.singular_nodes;
                report.segment_breaks += bundle.segment_breaks;
                collect_checks(bundle, report);
            }
            if (want_transverses) {
                auto bundle = generate_transverses(s, kind, options.tables, options.exec);
                report.singular_nodes += bundle.singular_nodes;
                report.segment_breaks += bundle.segment_breaks;
                emitter.emit(bundle.direct, file_stem("orbit-t", s, kind));
                emitter.emit(bundle.cayley, file_stem("cayley-t", s, kind));
                emitter.emit(bundle.cayley_alt, file_stem("cayl-a-t", s, kind));
            }
        }
    }

    // The future-past sequence is inherently hyperbolic; an explicit
    // request always runs it, the full run includes it when the metric
    // selection covers the hyperbolic plane.
    const bool want_frames =
        options.mode == RunMode::future_past ||
        (options.mode == RunMode::all && selected(options, MetricKind::hyperbolic));
    if (want_frames) {
        const auto frames = future_past_frames(options.tables, options.exec);
        report.singular_nodes += frames.singular_nodes;
        report.segment_breaks += frames.segment_breaks;
        for (std::size_t j = 0; j < frames.frames.size(); ++j) {
            char stem[32];
            std::snprintf(stem, sizeof stem, "future-past-%02zu", j);
            emitter.emit(frames.frames[j], stem);
        }
    }
    return report;
}

namespace {

const char* kind_name(MetricKind kind) {
    switch (kind) {
        case MetricKind::elliptic: return "elliptic";
        case MetricKind::parabolic: return "parabolic";
        case MetricKind::hyperbolic: return "hyperbolic";
    }
    return "?";
}

const char* focal_label(MetricKind kind) {
    switch (kind) {
        case MetricKind::elliptic: return "Distance to center is:";
        case MetricKind::parabolic: return "Directrice is:";
        case MetricKind::hyperbolic: return "Difference to foci is:";
    }
    return "?";
}

}  // namespace

void print_report(std::ostream& out, const RunReport& report, bool verbose) {
    out << "files written: " << report.files.size() << '\n';
    if (verbose) {
        for (const auto& name : report.files) out << "  " << name << '\n';
    }
    if (!report.focal_checks.empty()) {
        out << "focal checks (K orbits):\n";
        for (const auto& check : report.focal_checks) {
            char line[160];
            std::snprintf(line, sizeof line,
                          "  %-10s vval=%-7g nodes=%-3zu expected=%-9.4f max_dev=%.2e flips=%d %s\n",
                          kind_name(check.kind), check.vval, check.values.size(), check.expected,
                          check.max_expected_dev, check.sign_flips,
                          check.passes() ? "ok" : "FAIL");
            out << line;
        }
    }
    if (!report.vertex_checks.empty()) {
        out << "Cayley vertex checks (A, parabolic):\n";
        for (const auto& row : report.vertex_checks) {
            char line[128];
            std::snprintf(line, sizeof line, "  vi=%-2d vval=%-7.3f values=(%.4f, %.4f) %s\n",
                          row.vi, row.vval, row.value_c, row.value_c1, row.ok ? "ok" : "FAIL");
            out << line;
        }
    }
    if (!report.parabola_fits.empty()) {
        out << "parabola fits (Cayley images): " << report.parabola_fits.size() << " orbits\n";
    }
    out << "singular nodes: " << report.singular_nodes
        << ", segment breaks: " << report.segment_breaks << '\n';
    out << "checks: " << (report.checks_ok ? "PASS" : "FAIL") << '\n';
}

void print_classic_checks(std::ostream& out, const RunReport& report) {
    char buf[96];
    for (const auto& check : report.focal_checks) {
        out << '\n' << focal_label(check.kind);
        bool have_prev = false;
        double prev = 0.0;
        for (double value : check.values) {
            const double delta = std::abs(value - prev);
            const bool steady =
                have_prev && (delta < kFocalConstancyTol ||
                              (value != 0.0 && std::abs(delta / value) < kFocalConstancyTol));
            if (steady) {
                out << '=';
            } else {
                std::snprintf(buf, sizeof buf, " %.3f", value);
                out << buf;
            }
            prev = value;
            have_prev = true;
        }
    }
    for (const auto& row : report.parabola_fits) {
        const auto& fits = row.fits;
        if (!fits.cayley_fit || !fits.cayley_alt_fit) continue;
        const auto& f0 = *fits.cayley_fit;
        const auto& f1 = *fits.cayley_alt_fit;
        if (!f0.focal_u || !f1.focal_u) continue;
        std::snprintf(buf, sizeof buf, "\nParab (%c/%2d/%6.3f); vert=(%6.3f,%7.3f); l=%7.4f",
                      subgroup_letter(row.subgroup), fits.vi, fits.vval, *f0.focal_u, *f0.focal_v,
                      *f0.focal_l);
        out << buf;
        std::snprintf(buf, sizeof buf, "; second vert=(%6.3f,%7.3f); l=%7.4f", *f1.focal_u,
                      *f1.focal_v, *f1.focal_l);
        out << buf;
    }
    for (const auto& row : report.vertex_checks) {
        std::snprintf(buf, sizeof buf, "\nCheck vertices: %g and %g", row.value_c, row.value_c1);
        out << buf;
    }
    out << '\n';
}

}  // namespace eph
