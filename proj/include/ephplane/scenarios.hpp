#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ephplane/curve.hpp"
#include "ephplane/moebius.hpp"
#include "ephplane/tuning.hpp"

namespace eph {

/// Generators run their independent work items in parallel by default;
/// the serial path is the reference the parallel one is tested against.
/// Results are identical either way.
enum class Exec { serial, parallel };

/// Consecutive check values count as equal under this absolute-or-relative
/// threshold.
inline constexpr double kFocalConstancyTol = 1e-3;
/// Allowed deviation of a check value from its closed form.
inline constexpr double kClosedFormTol = 1e-3;
/// Allowed deviation of a Cayley-image vertex check from -1.
inline constexpr double kVertexTol = 1e-3;
/// Slack of the hyperbolic unit-disk bound, -u^2 + v^2 <= this.
inline constexpr double kDiskSlack = 1.001;

/// Group parameter and seed point of one node on one curve.
struct NodeParams {
    double t = 0.0;
    double x = 0.0;
    double y = 0.0;
    /// Ordinate the seed derives from; keyed into the focal checks.
    double vval = 0.0;
};

/// Seed for orbit `vi` at parameter value `f`. The A subgroup walks seeds
/// around the unit circle (the full circle in the hyperbolic plane), N and
/// K pick ordinates from the vpoints row, N mirroring them to negatives in
/// the hyperbolic plane; K measures its parameter in units of pi.
NodeParams node_params(Subgroup s, MetricKind kind, int vi, double f, const TuningTables& tables);

/// Rough bound check before a point is committed to a curve. Inside the
/// plot box always; hyperbolic pictures additionally demand the upper half
/// plane (direct) or the slacked unit disk (Cayley images), except under
/// the future-past inversion where the box alone decides.
bool in_limits(const PlanePoint& p, MetricKind kind, bool cayley, bool inversion,
               const TuningTables& tables);

/// Parabola v = a u^2 + b u + c through three points, with focal length
/// and focus components when the quadratic term survives.
struct ParabolaFit {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
    std::optional<double> focal_l;  // 1 / (4a)
    std::optional<double> focal_u;  // b / (2a)
    std::optional<double> focal_v;  // c - (b / (2a))^2
};

ParabolaFit fit_parabola(const PlanePoint& p0, const PlanePoint& p1, const PlanePoint& p2);

/// Focal invariant of a K orbit seeded at ordinate vval, evaluated at one
/// node: distance to the circle centre (elliptic), focus distance minus
/// the ordinate (parabolic), or the difference of the two focus distances
/// (hyperbolic).
double check_focal_K(MetricKind kind, double vval, const PlanePoint& node);

/// Vertex residuals focal_v + focal_u^2 of the two Cayley-image fits;
/// both sit at -1 when the vertices lie on v = +-u^2 - 1.
std::pair<double, double> check_parabolic_vertices(const ParabolaFit& fit0,
                                                   const ParabolaFit& fit1);

/// Closed-form value the focal invariant should hold along a K orbit:
/// |v - 1/v| / 2 (elliptic), 1/(4v) - v (parabolic, signed), (v^2 + 1)/v
/// (hyperbolic, magnitude; the sign flips with the half-plane).
double focal_expected(MetricKind kind, double vval);

/// Per-orbit record of the focal invariant along the non-endpoint nodes.
struct FocalCheckReport {
    MetricKind kind = MetricKind::elliptic;
    int vi = 0;
    double vval = 0.0;
    std::vector<double> values;    // node order; endpoints and singular nodes excluded
    double expected = 0.0;         // focal_expected(kind, vval)
    bool constancy_ok = true;      // consecutive-pair criterion (magnitudes for hyperbolic)
    double max_rel_dev = 0.0;      // worst consecutive-pair deviation
    double max_expected_dev = 0.0; // worst |value - expected| (magnitude for hyperbolic)
    int sign_flips = 0;

    /// Criterion verdict: constancy always, closed-form agreement for the
    /// elliptic and hyperbolic geometries.
    bool passes() const;
};

/// Whether some orbit of a hyperbolic run changes sign, the mark of the
/// half-plane not being preserved.
bool any_sign_flip(const std::vector<FocalCheckReport>& reports);

/// Three-point parabola fits of the two Cayley images of one orbit.
struct OrbitFitPair {
    int vi = 0;
    double vval = 0.0;
    std::optional<ParabolaFit> cayley_fit;
    std::optional<ParabolaFit> cayley_alt_fit;
};

/// Cayley-vertex residuals of one orbit, evaluated against -1.
struct VertexCheckRow {
    int vi = 0;
    double vval = 0.0;
    double value_c = 0.0;
    double value_c1 = 0.0;
    bool ok = false;
};

struct OrbitBundle {
    Subgroup subgroup = Subgroup::A;
    MetricKind kind = MetricKind::elliptic;
    std::vector<Curve> direct;      // one curve per orbit index
    std::vector<Curve> cayley;      // image under C * Exp
    std::vector<Curve> cayley_alt;  // image under C1 * Exp
    std::vector<FocalCheckReport> focal_checks;  // K subgroup, vval != 0
    std::vector<OrbitFitPair> parabola_fits;     // parabolic kind, subgroups A and N
    int singular_nodes = 0;
    int segment_breaks = 0;
};

/// Orbits of one subgroup in one geometry, with their two Cayley images,
/// focal checks and Cayley-image parabola fits.
OrbitBundle generate_orbits(Subgroup s, MetricKind kind, const TuningTables& tables,
                            Exec exec = Exec::parallel);

struct TransverseBundle {
    Subgroup subgroup = Subgroup::A;
    MetricKind kind = MetricKind::elliptic;
    std::vector<Curve> direct;      // one curve per parameter step
    std::vector<Curve> cayley;
    std::vector<Curve> cayley_alt;
    int singular_nodes = 0;
    int segment_breaks = 0;
};

/// Transversal curves: the same node lattice as the orbits traversed in
/// transposed order (fixed parameter, varying seed).
TransverseBundle generate_transverses(Subgroup s, MetricKind kind, const TuningTables& tables,
                                      Exec exec = Exec::parallel);

/// Direct vector field sampled on the arrow grid; singular points are
/// omitted and counted.
ArrowField generate_arrows(Subgroup s, MetricKind kind, const TuningTables& tables,
                           Exec exec = Exec::parallel);

/// One 2-point curve per arrow, ready for emission.
std::vector<Curve> arrow_curves(const ArrowField& field);

struct FrameSet {
    std::vector<std::vector<Curve>> frames;
    int singular_nodes = 0;
    int segment_breaks = 0;
};

/// Future-to-past transition: a family of hyperbolas pushed through
/// Moebius maps of exponentially growing strength, frame 0 being the
/// untouched grid.
FrameSet future_past_frames(const TuningTables& tables, Exec exec = Exec::parallel);

/// Vertex checks of an A-subgroup parabolic bundle.
std::vector<VertexCheckRow> vertex_checks(const OrbitBundle& bundle);

}  // namespace eph
