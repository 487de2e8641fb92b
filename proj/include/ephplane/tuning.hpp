#pragma once

#include <array>

#include "ephplane/moebius.hpp"

namespace eph {

/// Picture-tuning constants: orbit counts, step counts, parameter ranges
/// and seed ordinates per (subgroup, geometry), plus the arrow grid,
/// plot bounds and the future-to-past frame schedule. Too many curves mess
/// a picture up, too few miss the singular regions, so each combination
/// gets its own numbers.
struct TuningTables {
    /// Orbits per picture, indexed [subgroup][kind].
    std::array<std::array<int, 3>, 3> vilimits{{{10, 20, 30}, {10, 10, 19}, {10, 10, 10}}};
    /// Half number of parameter steps along a curve, indexed [subgroup][kind].
    std::array<std::array<int, 3>, 3> fsteps{{{15, 15, 20}, {15, 15, 25}, {12, 15, 15}}};
    /// Half-range of the group parameter, indexed [subgroup][kind].
    std::array<std::array<double, 3>, 3> flimits{
        {{2.0, 2.0, 4.0}, {10.0, 4.0, 4.0}, {0.5, 0.5, 0.5}}};
    /// Orbit-origin ordinates, indexed [kind][orbit].
    std::array<std::array<double, 10>, 3> vpoints{
        {{0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0, 2.0, 3.0, 5.0, 8.0, 16.0},
         {0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0, 2.0, 3.0, 6.0, 10.0, 20.0},
         {0, 1.0 / 8, 1.0 / 4, 1.0 / 2, 1.0, 2.0, 3.0, 5.0, 10.0, 100.0}}};

    /// Plot half-extents; points beyond are dropped and curves restarted.
    double ulim = 8.5;
    double vlim = 8.5;

    /// Arrow grid: u = k * spacing for k in [k_begin, k_end), likewise v.
    int arrow_k_begin = -10;
    int arrow_k_end = 10;
    int arrow_j_begin = 0;
    int arrow_j_end = 11;
    double arrow_spacing = 1.0 / 3;

    /// Future-to-past transition schedule.
    int fp_curves = 15;
    int fp_nodes = 40;
    int fp_frames = 8;
    double fp_exp_scale = 1.3;
    double fp_node_scale = 4.0;
    std::array<double, 16> fp_rad{1.0 / 5, 1.0 / 4, 1 / 3.5, 1.0 / 3, 1 / 2.5, 1.0 / 2,
                                  1 / 1.5, 1.0,     1.5,     2.0,     2.5,     3.0,
                                  3.5,     4.0,     4.5,     5.0};

    int vilimit(Subgroup s, MetricKind k) const {
        return vilimits[subgroup_index(s)][kind_index(k)];
    }
    int fstep(Subgroup s, MetricKind k) const { return fsteps[subgroup_index(s)][kind_index(k)]; }
    double flimit(Subgroup s, MetricKind k) const {
        return flimits[subgroup_index(s)][kind_index(k)];
    }
    double vpoint(MetricKind k, int i) const;
};

}  // namespace eph
