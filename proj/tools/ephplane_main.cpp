#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ephplane/errors.hpp"
#include "ephplane/run.hpp"

namespace {

int run_cli(int argc, char** argv) {
    CLI::App app{"Clifford-algebra Moebius engine for the elliptic, parabolic and hyperbolic "
                 "plane geometries: subgroup orbits, transverses, vector-field arrows, Cayley "
                 "images and the future-past transition, with numeric checks of their focal "
                 "properties."};

    std::string metric = "all";
    std::string subgroup = "all";
    std::string mode = "all";
    std::string format = "csv";
    std::string out_dir = "out";
    bool verbose = false;
    bool serial = false;

    app.add_option("--metric", metric, "Plane geometry: e, p, h or all")
        ->check(CLI::IsMember({"e", "p", "h", "all"}));
    app.add_option("--subgroup", subgroup, "Subgroup: A, N, K or all")
        ->check(CLI::IsMember({"A", "N", "K", "all"}));
    app.add_option("--mode", mode,
                   "What to produce: orbits, transverses, arrows, future-past, checks or all")
        ->check(CLI::IsMember({"orbits", "transverses", "arrows", "future-past", "checks", "all"}));
    app.add_option("--out-dir", out_dir, "Output directory (created if missing)");
    app.add_option("--format", format, "Output format: csv, svg or both")
        ->check(CLI::IsMember({"csv", "svg", "both"}));
    app.add_flag("--verbose", verbose, "List files and print the classic check streams");
    app.add_flag("--serial", serial, "Run the serial reference generators");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    eph::RunOptions options;
    if (metric == "e") options.kind = eph::MetricKind::elliptic;
    if (metric == "p") options.kind = eph::MetricKind::parabolic;
    if (metric == "h") options.kind = eph::MetricKind::hyperbolic;
    if (subgroup == "A") options.subgroup = eph::Subgroup::A;
    if (subgroup == "N") options.subgroup = eph::Subgroup::N;
    if (subgroup == "K") options.subgroup = eph::Subgroup::K;
    if (mode == "orbits") options.mode = eph::RunMode::orbits;
    if (mode == "transverses") options.mode = eph::RunMode::transverses;
    if (mode == "arrows") options.mode = eph::RunMode::arrows;
    if (mode == "future-past") options.mode = eph::RunMode::future_past;
    if (mode == "checks") options.mode = eph::RunMode::checks;
    options.emit.out_dir = out_dir;
    options.emit.csv = format != "svg";
    options.emit.svg = format != "csv";
    options.emit.ulim = options.tables.ulim;
    options.emit.vlim = options.tables.vlim;
    options.exec = serial ? eph::Exec::serial : eph::Exec::parallel;

    try {
        const eph::RunReport report = eph::run(options);
        eph::print_report(std::cout, report, verbose);
        if (verbose) print_classic_checks(std::cout, report);
        return report.checks_ok ? 0 : 3;
    } catch (const eph::IoError& e) {
        std::cerr << "i/o error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run_cli(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
