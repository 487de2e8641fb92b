#pragma once

#include <vector>

#include "ephplane/moebius.hpp"

namespace eph {

struct CurveMeta {
    Subgroup subgroup = Subgroup::A;
    MetricKind kind = MetricKind::elliptic;
    MoebiusVariant variant = MoebiusVariant::direct;
    double color_grade = 0.0;
    int curve_id = 0;

    friend bool operator==(const CurveMeta&, const CurveMeta&) = default;
};

/// Maximal run of consecutive in-bounds, non-singular points.
struct CurveSegment {
    std::vector<PlanePoint> points;

    friend bool operator==(const CurveSegment&, const CurveSegment&) = default;
};

/// Polyline in the (u, v) plane. Segment boundaries mark exactly the
/// positions where a point left the bounded area or the map was singular.
struct Curve {
    CurveMeta meta;
    std::vector<CurveSegment> segments;

    friend bool operator==(const Curve&, const Curve&) = default;

    /// Segments worth drawing; single-point remnants are dropped at emission.
    std::vector<CurveSegment> drawable() const {
        std::vector<CurveSegment> out;
        for (const auto& seg : segments) {
            if (seg.points.size() >= 2) out.push_back(seg);
        }
        return out;
    }
};

/// Appends points to a curve, starting a fresh segment after each cut.
class CurveBuilder {
public:
    explicit CurveBuilder(CurveMeta meta = {}) { curve_.meta = meta; }

    void add(const PlanePoint& p) {
        if (curve_.segments.empty() || closed_) {
            curve_.segments.emplace_back();
            closed_ = false;
        }
        curve_.segments.back().points.push_back(p);
    }

    /// Ends the current segment; a no-op when nothing has been added since
    /// the last cut.
    void cut() {
        if (!closed_ && !curve_.segments.empty()) {
            closed_ = true;
            ++breaks_;
        }
    }

    int breaks() const { return breaks_; }
    Curve take() { return std::move(curve_); }

private:
    Curve curve_;
    bool closed_ = false;
    int breaks_ = 0;
};

/// Field sample drawn as an arrow from `base` towards `base + (du, dv)`.
struct Arrow {
    PlanePoint base;
    double du = 0.0;
    double dv = 0.0;

    friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct ArrowField {
    Subgroup subgroup = Subgroup::A;
    MetricKind kind = MetricKind::elliptic;
    std::vector<Arrow> arrows;
    int singular_skipped = 0;

    friend bool operator==(const ArrowField&, const ArrowField&) = default;
};

}  // namespace eph
