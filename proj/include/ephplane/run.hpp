#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ephplane/emit.hpp"
#include "ephplane/scenarios.hpp"

namespace eph {

enum class RunMode { orbits, transverses, arrows, future_past, checks, all };

struct RunOptions {
    RunMode mode = RunMode::all;
    /// Empty optionals select everything.
    std::optional<Subgroup> subgroup;
    std::optional<MetricKind> kind;
    EmitConfig emit;
    TuningTables tables;
    Exec exec = Exec::parallel;
};

struct FitReportRow {
    Subgroup subgroup = Subgroup::A;
    OrbitFitPair fits;
};

/// What a run produced: the files written (in emission order), the check
/// reports backing the exit status, and failure counters.
struct RunReport {
    std::vector<std::string> files;
    std::vector<FocalCheckReport> focal_checks;
    std::vector<VertexCheckRow> vertex_checks;
    std::vector<FitReportRow> parabola_fits;  // parabolic Cayley images, subgroups A and N
    int singular_nodes = 0;
    int segment_breaks = 0;
    /// Focal constancy + closed forms, the hyperbolic sign flip, and the
    /// Cayley vertex residuals, evaluated wherever the selection covers them.
    bool checks_ok = true;
};

/// Generates and emits the selected datasets. Throws IoError on emission
/// failure; check outcomes land in the report instead of throwing.
RunReport run(const RunOptions& options);

/// Human-readable summary of a run.
void print_report(std::ostream& out, const RunReport& report, bool verbose);

/// Check streams in the classic console layout: one line per K orbit with
/// "=" marks for steady values, plus the parabola fit and vertex lines.
void print_classic_checks(std::ostream& out, const RunReport& report);

}  // namespace eph
