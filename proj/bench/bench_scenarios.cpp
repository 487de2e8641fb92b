// Times the parallel generators against the serial reference on a scaled-up
// node budget and verifies that both produce identical output.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "ephplane/emit.hpp"
#include "ephplane/scenarios.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string csv_of(const std::vector<eph::Curve>& curves) {
    std::ostringstream out;
    eph::write_csv(curves, out, eph::EmitConfig{});
    return out.str();
}

struct Case {
    const char* name;
    eph::Subgroup subgroup;
    eph::MetricKind kind;
};

}  // namespace

int main() {
    eph::TuningTables tables;
    // Denser parameter sampling so each orbit is a real chunk of work.
    for (auto& row : tables.fsteps) {
        for (auto& steps : row) steps *= 40;
    }

    const Case cases[] = {
        {"orbits A/e", eph::Subgroup::A, eph::MetricKind::elliptic},
        {"orbits N/p", eph::Subgroup::N, eph::MetricKind::parabolic},
        {"orbits K/h", eph::Subgroup::K, eph::MetricKind::hyperbolic},
        {"orbits A/h", eph::Subgroup::A, eph::MetricKind::hyperbolic},
    };

    std::printf("%-14s %12s %12s %9s  %s\n", "case", "serial (ms)", "parallel (ms)", "speedup",
                "match");
    bool all_match = true;
    for (const Case& c : cases) {
        auto start = Clock::now();
        const auto serial = eph::generate_orbits(c.subgroup, c.kind, tables, eph::Exec::serial);
        const double serial_ms = ms_since(start);

        start = Clock::now();
        const auto parallel =
            eph::generate_orbits(c.subgroup, c.kind, tables, eph::Exec::parallel);
        const double parallel_ms = ms_since(start);

        const bool match = csv_of(serial.direct) == csv_of(parallel.direct) &&
                           csv_of(serial.cayley) == csv_of(parallel.cayley) &&
                           csv_of(serial.cayley_alt) == csv_of(parallel.cayley_alt);
        all_match = all_match && match;
        std::printf("%-14s %12.1f %12.1f %8.2fx  %s\n", c.name, serial_ms, parallel_ms,
                    serial_ms / parallel_ms, match ? "yes" : "NO");
    }

    {
        auto start = Clock::now();
        const auto serial = eph::future_past_frames(tables, eph::Exec::serial);
        const double serial_ms = ms_since(start);
        start = Clock::now();
        const auto parallel = eph::future_past_frames(tables, eph::Exec::parallel);
        const double parallel_ms = ms_since(start);
        bool match = serial.frames.size() == parallel.frames.size();
        for (std::size_t i = 0; match && i < serial.frames.size(); ++i) {
            match = csv_of(serial.frames[i]) == csv_of(parallel.frames[i]);
        }
        all_match = all_match && match;
        std::printf("%-14s %12.1f %12.1f %8.2fx  %s\n", "future-past", serial_ms, parallel_ms,
                    serial_ms / parallel_ms, match ? "yes" : "NO");
    }

    return all_match ? 0 : 1;
}
