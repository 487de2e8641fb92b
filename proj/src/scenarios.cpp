#include "ephplane/scenarios.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <numbers>

#include "ephplane/errors.hpp"

namespace eph {

namespace {

constexpr double kPi = std::numbers::pi;

double vpoint_at(const TuningTables& tables, MetricKind kind, int i) {
    if (i < 0 || i >= static_cast<int>(tables.vpoints[0].size())) {
        throw IndexError("vpoints index out of range");
    }
    return tables.vpoints[static_cast<std::size_t>(kind_index(kind))][static_cast<std::size_t>(i)];
}

}  // namespace

double TuningTables::vpoint(MetricKind k, int i) const { return vpoint_at(*this, k, i); }

NodeParams node_params(Subgroup s, MetricKind kind, int vi, double f,
                       const TuningTables& tables) {
    const int limit = tables.vilimit(s, kind);
    if (vi < 0 || vi >= limit) throw IndexError("orbit index out of range");
    switch (s) {
        case Subgroup::A: {
            double vval = static_cast<double>(vi) / (limit - 1);
            // the hyperbolic plane needs the negative seeds as well
            if (kind == MetricKind::hyperbolic) vval *= 2;
            return {f, std::cos(kPi * vval), std::sin(kPi * vval), vval};
        }
        case Subgroup::N: {
            double vval;
            if (kind == MetricKind::hyperbolic) {
                const int off = vi - limit / 2;
                vval = (off < 0 ? -1.0 : 1.0) * vpoint_at(tables, kind, std::abs(off));
            } else {
                vval = vpoint_at(tables, kind, vi);
            }
            return {f, 0.0, vval, vval};
        }
        case Subgroup::K: {
            const double vval = vpoint_at(tables, kind, vi);
            return {f * kPi, 0.0, vval, vval};
        }
    }
    throw IndexError("unknown subgroup");
}

bool in_limits(const PlanePoint& p, MetricKind kind, bool cayley, bool inversion,
               const TuningTables& tables) {
    if (!(std::abs(p.u) <= tables.ulim) || !(std::abs(p.v) <= tables.vlim)) return false;
    if (kind != MetricKind::hyperbolic || inversion) return true;
    if (!cayley) return p.v >= 0.0;
    return -p.u * p.u + p.v * p.v - kDiskSlack <= 0.0;
}

ParabolaFit fit_parabola(const PlanePoint& p0, const PlanePoint& p1, const PlanePoint& p2) {
    // Vandermonde determinant of the 3x3 system.
    const double det = (p0.u - p1.u) * (p0.u - p2.u) * (p1.u - p2.u);
    if (std::abs(det) <= 1e-12) throw DegenerateFitError("abscissae too close for a parabola fit");
    const double d01 = (p0.v - p1.v) / (p0.u - p1.u);
    const double d12 = (p1.v - p2.v) / (p1.u - p2.u);
    ParabolaFit fit;
    fit.a = (d01 - d12) / (p0.u - p2.u);
    fit.b = d01 - fit.a * (p0.u + p1.u);
    fit.c = p0.v - (fit.a * p0.u + fit.b) * p0.u;
    if (std::abs(fit.a) > 1e-12) {
        const double half_axis = fit.b / (2.0 * fit.a);
        fit.focal_l = 1.0 / (4.0 * fit.a);
        fit.focal_u = half_axis;
        fit.focal_v = fit.c - half_axis * half_axis;
    }
    return fit;
}

double check_focal_K(MetricKind kind, double vval, const PlanePoint& node) {
    const double u = node.u;
    const double v = node.v;
    switch (kind) {
        case MetricKind::elliptic:
            return std::sqrt(u * u + std::pow(v - (vval + 1.0 / vval) / 2.0, 2));
        case MetricKind::parabolic:
            return std::sqrt(u * u + std::pow(v - (vval + 1.0 / vval / 4.0), 2)) - v;
        case MetricKind::hyperbolic: {
            const double p = (vval * vval + 1.0) / vval / std::sqrt(2.0);
            // radicand is (v^2 - 1)^2 / (4 v^2); rounding can push it just below zero
            const double root = std::sqrt(std::max(p * p / 2.0 - 1.0, 0.0));
            const double focus = vval < 1.0 ? p - root : p + root;
            return std::sqrt(u * u + std::pow(v - focus, 2)) -
                   std::sqrt(u * u + std::pow(v - focus + 2.0 * p, 2));
        }
    }
    return 0.0;
}

double focal_expected(MetricKind kind, double vval) {
    switch (kind) {
        case MetricKind::elliptic: return std::abs(vval - 1.0 / vval) / 2.0;
        case MetricKind::parabolic: return 1.0 / (4.0 * vval) - vval;
        case MetricKind::hyperbolic: return (vval * vval + 1.0) / vval;
    }
    return 0.0;
}

std::pair<double, double> check_parabolic_vertices(const ParabolaFit& fit0,
                                                   const ParabolaFit& fit1) {
    if (!fit0.focal_u || !fit1.focal_u) {
        throw DegenerateFitError("vertex check needs both focal parameter sets");
    }
    return {*fit0.focal_v + *fit0.focal_u * *fit0.focal_u,
            *fit1.focal_v + *fit1.focal_u * *fit1.focal_u};
}

bool FocalCheckReport::passes() const {
    if (!constancy_ok) return false;
    if (kind == MetricKind::parabolic) return true;
    return max_expected_dev <= kClosedFormTol;
}

bool any_sign_flip(const std::vector<FocalCheckReport>& reports) {
    for (const auto& r : reports) {
        if (r.sign_flips > 0) return true;
    }
    return false;
}

namespace {

bool pair_steady(double prev, double next) {
    const double delta = std::abs(next - prev);
    if (delta < kFocalConstancyTol) return true;
    return next != 0.0 && std::abs(delta / next) < kFocalConstancyTol;
}

FocalCheckReport finish_focal_report(MetricKind kind, int vi, double vval,
                                     std::vector<double> values) {
    FocalCheckReport report;
    report.kind = kind;
    report.vi = vi;
    report.vval = vval;
    report.expected = focal_expected(kind, vval);
    report.values = std::move(values);
    const bool magnitude = kind == MetricKind::hyperbolic;
    for (std::size_t i = 0; i < report.values.size(); ++i) {
        const double value = report.values[i];
        const double compare = magnitude ? std::abs(value) : value;
        report.max_expected_dev =
            std::max(report.max_expected_dev, std::abs(compare - report.expected));
        if (i == 0) continue;
        const double prev = report.values[i - 1];
        bool ok = pair_steady(prev, value);
        if (magnitude && !ok) ok = pair_steady(std::abs(prev), std::abs(value));
        if (!ok) report.constancy_ok = false;
        const double delta = std::abs(value - prev);
        const double rel = value != 0.0 ? std::abs(delta / value) : delta;
        if (magnitude) {
            const double mdelta = std::abs(std::abs(value) - std::abs(prev));
            const double mrel = value != 0.0 ? std::abs(mdelta / value) : mdelta;
            report.max_rel_dev = std::max(report.max_rel_dev, mrel);
        } else {
            report.max_rel_dev = std::max(report.max_rel_dev, rel);
        }
        if ((prev < 0.0) != (value < 0.0)) ++report.sign_flips;
    }
    return report;
}

bool node_failure(const AlgebraError& err) {
    return dynamic_cast<const ZeroNormError*>(&err) != nullptr ||
           dynamic_cast<const NotVectorError*>(&err) != nullptr ||
           dynamic_cast<const NotInvertibleError*>(&err) != nullptr;
}

struct OrbitRow {
    Curve direct;
    Curve cayley;
    Curve cayley_alt;
    std::optional<FocalCheckReport> focal;
    std::optional<OrbitFitPair> fits;
    int singular_nodes = 0;
    int segment_breaks = 0;
};

// Rolling window of the last three successful Cayley-image nodes.
struct FitWindow {
    std::array<PlanePoint, 3> pts{};
    int filled = 0;

    void push(const PlanePoint& p) {
        pts[0] = pts[1];
        pts[1] = pts[2];
        pts[2] = p;
        if (filled < 3) ++filled;
    }
};

OrbitRow compute_orbit_row(Subgroup s, MetricKind kind, int vi, const TuningTables& tables) {
    OrbitRow row;
    const int steps = tables.fstep(s, kind);
    const double range = tables.flimit(s, kind);
    const double grade = 1.2 * vi / tables.vilimit(s, kind);
    const double vval = node_params(s, kind, vi, 0.0, tables).vval;

    CurveBuilder direct({s, kind, MoebiusVariant::direct, grade, vi});
    CurveBuilder cayley({s, kind, MoebiusVariant::cayley_point, grade, vi});
    CurveBuilder cayley_alt({s, kind, MoebiusVariant::cayley1_point, grade, vi});

    const bool track_focal = s == Subgroup::K && vval != 0.0;
    const bool track_fit = kind == MetricKind::parabolic && s != Subgroup::K;
    std::vector<double> focal_values;
    std::array<FitWindow, 2> windows;
    std::array<std::optional<ParabolaFit>, 2> fits;

    for (int j = -steps; j <= steps; ++j) {
        const double f = range * j / steps;
        const NodeParams node = node_params(s, kind, vi, f, tables);
        const PlanePoint seed{node.x, node.y};

        bool direct_ok = false;
        PlanePoint image{};
        try {
            const auto q = moebius_family<double>(s, kind, MoebiusVariant::direct, node.t, seed);
            image = {q.u, q.v};
            direct_ok = true;
            if (in_limits(image, kind, false, false, tables)) {
                direct.add(image);
            } else {
                direct.cut();
            }
        } catch (const AlgebraError& err) {
            if (!node_failure(err)) throw;
            ++row.singular_nodes;
            direct.cut();
        }

        // Endpoints are excluded from the focal streams.
        if (track_focal && direct_ok && j != -steps && j != steps) {
            focal_values.push_back(check_focal_K(kind, vval, image));
        }

        const auto cayley_node = [&](MoebiusVariant variant, CurveBuilder& builder, int slot) {
            try {
                const auto q = moebius_family<double>(s, kind, variant, node.t, seed);
                const PlanePoint mapped{q.u, q.v};
                if (in_limits(mapped, kind, true, false, tables)) {
                    builder.add(mapped);
                } else {
                    builder.cut();
                }
                if (track_fit) {
                    auto& window = windows[static_cast<std::size_t>(slot)];
                    window.push(mapped);
                    if (j == 1 && window.filled == 3) {
                        try {
                            fits[static_cast<std::size_t>(slot)] =
                                fit_parabola(window.pts[0], window.pts[1], window.pts[2]);
                        } catch (const DegenerateFitError&) {
                        }
                    }
                }
            } catch (const AlgebraError& err) {
                if (!node_failure(err)) throw;
                ++row.singular_nodes;
                builder.cut();
            }
        };
        cayley_node(MoebiusVariant::cayley_point, cayley, 0);
        cayley_node(MoebiusVariant::cayley1_point, cayley_alt, 1);
    }

    row.segment_breaks = direct.breaks() + cayley.breaks() + cayley_alt.breaks();
    row.direct = direct.take();
    row.cayley = cayley.take();
    row.cayley_alt = cayley_alt.take();
    if (track_focal) row.focal = finish_focal_report(kind, vi, vval, std::move(focal_values));
    if (track_fit) row.fits = OrbitFitPair{vi, vval, fits[0], fits[1]};
    return row;
}

}  // namespace

namespace {

// Probes every orbit index up front so index errors from custom tables
// surface here rather than inside a parallel region.
void validate_seed_range(Subgroup s, MetricKind kind, const TuningTables& tables) {
    for (int vi = 0; vi < tables.vilimit(s, kind); ++vi) {
        node_params(s, kind, vi, 0.0, tables);
    }
}

}  // namespace

OrbitBundle generate_orbits(Subgroup s, MetricKind kind, const TuningTables& tables, Exec exec) {
    validate_seed_range(s, kind, tables);
    const int count = tables.vilimit(s, kind);
    std::vector<OrbitRow> rows(static_cast<std::size_t>(count));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int vi = 0; vi < count; ++vi) {
            rows[static_cast<std::size_t>(vi)] = compute_orbit_row(s, kind, vi, tables);
        }
    } else {
        for (int vi = 0; vi < count; ++vi) {
            rows[static_cast<std::size_t>(vi)] = compute_orbit_row(s, kind, vi, tables);
        }
    }

    OrbitBundle bundle;
    bundle.subgroup = s;
    bundle.kind = kind;
    for (auto& row : rows) {
        bundle.direct.push_back(std::move(row.direct));
        bundle.cayley.push_back(std::move(row.cayley));
        bundle.cayley_alt.push_back(std::move(row.cayley_alt));
        if (row.focal) bundle.focal_checks.push_back(std::move(*row.focal));
        if (row.fits) bundle.parabola_fits.push_back(std::move(*row.fits));
        bundle.singular_nodes += row.singular_nodes;
        bundle.segment_breaks += row.segment_breaks;
    }
    return bundle;
}

namespace {

struct TransverseRow {
    Curve direct;
    Curve cayley;
    Curve cayley_alt;
    int singular_nodes = 0;
    int segment_breaks = 0;
};

TransverseRow compute_transverse_row(Subgroup s, MetricKind kind, int jj,
                                     const TuningTables& tables) {
    TransverseRow row;
    const int steps = tables.fstep(s, kind);
    const double f = tables.flimit(s, kind) * (jj - steps) / steps;

    CurveBuilder direct({s, kind, MoebiusVariant::direct, 1.2, jj});
    CurveBuilder cayley({s, kind, MoebiusVariant::cayley_point, 1.2, jj});
    CurveBuilder cayley_alt({s, kind, MoebiusVariant::cayley1_point, 1.2, jj});

    for (int vi = 0; vi < tables.vilimit(s, kind); ++vi) {
        const NodeParams node = node_params(s, kind, vi, f, tables);
        const PlanePoint seed{node.x, node.y};
        const auto emit = [&](MoebiusVariant variant, CurveBuilder& builder, bool is_cayley) {
            try {
                const auto q = moebius_family<double>(s, kind, variant, node.t, seed);
                const PlanePoint mapped{q.u, q.v};
                if (in_limits(mapped, kind, is_cayley, false, tables)) {
                    builder.add(mapped);
                } else {
                    builder.cut();
                }
            } catch (const AlgebraError& err) {
                if (!node_failure(err)) throw;
                ++row.singular_nodes;
                builder.cut();
            }
        };
        emit(MoebiusVariant::direct, direct, false);
        emit(MoebiusVariant::cayley_point, cayley, true);
        emit(MoebiusVariant::cayley1_point, cayley_alt, true);
    }

    row.segment_breaks = direct.breaks() + cayley.breaks() + cayley_alt.breaks();
    row.direct = direct.take();
    row.cayley = cayley.take();
    row.cayley_alt = cayley_alt.take();
    return row;
}

}  // namespace

TransverseBundle generate_transverses(Subgroup s, MetricKind kind, const TuningTables& tables,
                                      Exec exec) {
    validate_seed_range(s, kind, tables);
    const int count = 2 * tables.fstep(s, kind) + 1;
    std::vector<TransverseRow> rows(static_cast<std::size_t>(count));
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int jj = 0; jj < count; ++jj) {
            rows[static_cast<std::size_t>(jj)] = compute_transverse_row(s, kind, jj, tables);
        }
    } else {
        for (int jj = 0; jj < count; ++jj) {
            rows[static_cast<std::size_t>(jj)] = compute_transverse_row(s, kind, jj, tables);
        }
    }

    TransverseBundle bundle;
    bundle.subgroup = s;
    bundle.kind = kind;
    for (auto& row : rows) {
        bundle.direct.push_back(std::move(row.direct));
        bundle.cayley.push_back(std::move(row.cayley));
        bundle.cayley_alt.push_back(std::move(row.cayley_alt));
        bundle.singular_nodes += row.singular_nodes;
        bundle.segment_breaks += row.segment_breaks;
    }
    return bundle;
}

ArrowField generate_arrows(Subgroup s, MetricKind kind, const TuningTables& tables, Exec exec) {
    struct Slot {
        bool ok = false;
        Arrow arrow;
    };
    const int nk = tables.arrow_k_end - tables.arrow_k_begin;
    const int nj = tables.arrow_j_end - tables.arrow_j_begin;
    const int total = nk * nj;
    std::vector<Slot> slots(static_cast<std::size_t>(total));

    const auto sample = [&](int idx) {
        const int k = tables.arrow_k_begin + idx / nj;
        const int j = tables.arrow_j_begin + idx % nj;
        const PlanePoint base{k * tables.arrow_spacing, j * tables.arrow_spacing};
        auto& slot = slots[static_cast<std::size_t>(idx)];
        try {
            const FieldVec vec = vector_field(s, kind, MoebiusVariant::direct, base);
            slot = {true, {base, vec.du, vec.dv}};
        } catch (const AlgebraError& err) {
            if (!node_failure(err)) throw;
            slot.ok = false;
        }
    };

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (int idx = 0; idx < total; ++idx) sample(idx);
    } else {
        for (int idx = 0; idx < total; ++idx) sample(idx);
    }

    ArrowField field;
    field.subgroup = s;
    field.kind = kind;
    for (const auto& slot : slots) {
        if (slot.ok) {
            field.arrows.push_back(slot.arrow);
        } else {
            ++field.singular_skipped;
        }
    }
    return field;
}

std::vector<Curve> arrow_curves(const ArrowField& field) {
    std::vector<Curve> curves;
    curves.reserve(field.arrows.size());
    int id = 0;
    for (const Arrow& arrow : field.arrows) {
        Curve c;
        c.meta = {field.subgroup, field.kind, MoebiusVariant::direct, 0.6, id++};
        c.segments.push_back(
            {{arrow.base, {arrow.base.u + arrow.du, arrow.base.v + arrow.dv}}});
        curves.push_back(std::move(c));
    }
    return curves;
}

namespace {

struct FrameCurveResult {
    Curve curve;
    int singular_nodes = 0;
    int segment_breaks = 0;
};

FrameCurveResult compute_frame_curve(int frame, int k, const Metric& metric,
                                     const TuningTables& tables) {
    FrameCurveResult result;
    const double angl =
        frame > 0 ? std::exp(frame / tables.fp_exp_scale - 3.0) : 0.0;
    using MV = Multivector<double>;
    const auto one = MV::scalar(metric, 1.0);
    const auto e1 = MV::unit(metric, 1);
    const CliffordMatrix2<double> mat{one, e1 * -angl, e1 * angl, one};

    // Integer division on purpose: the first eight curves share the dark
    // grade, the rest the light one.
    CurveBuilder builder({Subgroup::K, MetricKind::hyperbolic, MoebiusVariant::direct,
                          static_cast<double>(k / tables.fp_frames), k});
    const double rad = tables.fp_rad[static_cast<std::size_t>(k)];
    for (int l = -tables.fp_nodes / 2; l <= tables.fp_nodes / 2; ++l) {
        const double hyp_angle = l / tables.fp_node_scale;
        const PlanePoint seed{rad * std::cosh(hyp_angle), rad * std::sinh(hyp_angle)};
        try {
            const auto q = moebius_map(mat, Point2<double>{seed.u, seed.v}, metric);
            const PlanePoint mapped{q.u, q.v};
            if (in_limits(mapped, MetricKind::hyperbolic, false, true, tables)) {
                builder.add(mapped);
            } else {
                builder.cut();
            }
        } catch (const AlgebraError& err) {
            if (!node_failure(err)) throw;
            ++result.singular_nodes;
            builder.cut();
        }
    }
    result.segment_breaks = builder.breaks();
    result.curve = builder.take();
    return result;
}

}  // namespace

FrameSet future_past_frames(const TuningTables& tables, Exec exec) {
    if (tables.fp_curves < 0 || tables.fp_curves > static_cast<int>(tables.fp_rad.size())) {
        throw IndexError("fp_curves exceeds the radius table");
    }
    const Metric metric = plane_metric(MetricKind::hyperbolic);
    const int total = tables.fp_frames * tables.fp_curves;
    std::vector<FrameCurveResult> results(static_cast<std::size_t>(total));

    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int idx = 0; idx < total; ++idx) {
            results[static_cast<std::size_t>(idx)] = compute_frame_curve(
                idx / tables.fp_curves, idx % tables.fp_curves, metric, tables);
        }
    } else {
        for (int idx = 0; idx < total; ++idx) {
            results[static_cast<std::size_t>(idx)] = compute_frame_curve(
                idx / tables.fp_curves, idx % tables.fp_curves, metric, tables);
        }
    }

    FrameSet set;
    set.frames.resize(static_cast<std::size_t>(tables.fp_frames));
    for (int idx = 0; idx < total; ++idx) {
        auto& result = results[static_cast<std::size_t>(idx)];
        set.frames[static_cast<std::size_t>(idx / tables.fp_curves)].push_back(
            std::move(result.curve));
        set.singular_nodes += result.singular_nodes;
        set.segment_breaks += result.segment_breaks;
    }
    return set;
}

std::vector<VertexCheckRow> vertex_checks(const OrbitBundle& bundle) {
    std::vector<VertexCheckRow> rows;
    if (bundle.subgroup != Subgroup::A || bundle.kind != MetricKind::parabolic) return rows;
    for (const auto& fits : bundle.parabola_fits) {
        if (!fits.cayley_fit || !fits.cayley_alt_fit) continue;
        const auto [v0, v1] = check_parabolic_vertices(*fits.cayley_fit, *fits.cayley_alt_fit);
        rows.push_back({fits.vi, fits.vval, v0, v1,
                        std::abs(v0 + 1.0) <= kVertexTol && std::abs(v1 + 1.0) <= kVertexTol});
    }
    return rows;
}

}  // namespace eph
