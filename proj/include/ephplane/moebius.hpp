#pragma once

#include <array>
#include <cmath>
#include <string_view>

#include "ephplane/dual.hpp"
#include "ephplane/multivector.hpp"

namespace eph {

/// The three plane geometries, selected by the square of the second unit.
enum class MetricKind { elliptic = 0, parabolic = 1, hyperbolic = 2 };

constexpr std::array<MetricKind, 3> kAllKinds{MetricKind::elliptic, MetricKind::parabolic,
                                              MetricKind::hyperbolic};

constexpr double signum(MetricKind kind) { return static_cast<int>(kind) - 1; }
constexpr int kind_index(MetricKind kind) { return static_cast<int>(kind); }
constexpr char metric_letter(MetricKind kind) { return "eph"[kind_index(kind)]; }

/// The plane algebra of a geometry: e0^2 = -1, e1^2 = signum.
inline Metric plane_metric(MetricKind kind) { return Metric({-1.0, signum(kind)}); }

/// One-parameter subgroups of SL(2,R) from the Iwasawa decomposition.
enum class Subgroup { A = 0, N = 1, K = 2 };

constexpr std::array<Subgroup, 3> kAllSubgroups{Subgroup::A, Subgroup::N, Subgroup::K};

constexpr int subgroup_index(Subgroup s) { return static_cast<int>(s); }
constexpr char subgroup_letter(Subgroup s) { return "ANK"[subgroup_index(s)]; }

/// How a subgroup exponential acts: directly, conjugated by a Cayley
/// transform (operator picture), or composed with one (point picture).
enum class MoebiusVariant {
    direct = 0,
    cayley_op = 1,
    cayley1_op = 2,
    cayley_point = 3,
    cayley1_point = 4,
};

constexpr std::array<MoebiusVariant, 5> kAllVariants{
    MoebiusVariant::direct, MoebiusVariant::cayley_op, MoebiusVariant::cayley1_op,
    MoebiusVariant::cayley_point, MoebiusVariant::cayley1_point};

constexpr std::string_view variant_name(MoebiusVariant v) {
    switch (v) {
        case MoebiusVariant::direct: return "direct";
        case MoebiusVariant::cayley_op: return "cayley_op";
        case MoebiusVariant::cayley1_op: return "cayley1_op";
        case MoebiusVariant::cayley_point: return "cayley_point";
        case MoebiusVariant::cayley1_point: return "cayley1_point";
    }
    return "direct";
}

template <class S>
struct Point2 {
    S u{};
    S v{};
    friend bool operator==(const Point2&, const Point2&) = default;
};

using PlanePoint = Point2<double>;

/// 2x2 matrix with multivector entries, the carrier of Moebius maps.
/// Entries do not commute; products keep the written order.
template <class S>
struct CliffordMatrix2 {
    Multivector<S> a, b, c, d;

    CliffordMatrix2(Multivector<S> a_, Multivector<S> b_, Multivector<S> c_, Multivector<S> d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        require_same_metric(a, b);
        require_same_metric(a, c);
        require_same_metric(a, d);
    }

    const Metric& metric() const { return a.metric(); }

    friend bool operator==(const CliffordMatrix2&, const CliffordMatrix2&) = default;
};

template <class S>
CliffordMatrix2<S> identity_matrix(const Metric& metric) {
    using MV = Multivector<S>;
    return {MV::scalar(metric, S(1.0)), MV(metric), MV(metric), MV::scalar(metric, S(1.0))};
}

template <class S>
CliffordMatrix2<S> operator*(const CliffordMatrix2<S>& x, const CliffordMatrix2<S>& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

template <class S>
CliffordMatrix2<S> mat_mul(const CliffordMatrix2<S>& x, const CliffordMatrix2<S>& y) {
    return x * y;
}

template <class S>
CliffordMatrix2<S> operator*(const CliffordMatrix2<S>& x, std::type_identity_t<S> s) {
    return {x.a * s, x.b * s, x.c * s, x.d * s};
}

template <class S>
Multivector<S> embed_point(const Metric& metric, const Point2<S>& p) {
    return embed_vector(metric, std::vector<S>{p.u, p.v});
}

/// Linear-fractional action v -> (a v + b)(c v + d)^{-1} on an embedded
/// plane vector. A vanishing denominator norm surfaces as ZeroNormError,
/// a non-vector result as NotVectorError.
template <class S>
Point2<S> moebius_map(const CliffordMatrix2<S>& mat, const Point2<S>& p, const Metric& metric) {
    if (!(mat.metric() == metric)) throw MetricMismatchError("matrix metric differs");
    auto v = embed_point(metric, p);
    auto num = mat.a * v + mat.b;
    auto den = mat.c * v + mat.d;
    auto image = num * inverse(den);
    auto comps = extract_vector(image);
    return {comps[0], comps[1]};
}

template <class S>
struct CayleySet {
    CliffordMatrix2<S> C, CI, C1, C1I;
};

/// The two Cayley transforms of a geometry and their inverses.
///
/// Elliptic/hyperbolic: C = [[1, -e1], [s e1, 1]] with s the signum,
/// CI its inverse up to scale, and the alternative pair C1 = C*T,
/// C1I = TI*CI with T = [[1, e0], [e0, 1]]. The parabolic case has both
/// written out directly.
template <class S>
CayleySet<S> cayley_matrices(MetricKind kind) {
    using MV = Multivector<S>;
    const Metric m = plane_metric(kind);
    const auto one = MV::scalar(m, S(1.0));
    const auto e0 = MV::unit(m, 0);
    const auto e1 = MV::unit(m, 1);
    if (kind == MetricKind::parabolic) {
        return {CliffordMatrix2<S>{one, -e1, -e1, one}, CliffordMatrix2<S>{one, e1, e1, one},
                CliffordMatrix2<S>{one, -e1, e1, one}, CliffordMatrix2<S>{one, e1, -e1, one}};
    }
    const double s = signum(kind);
    CliffordMatrix2<S> C{one, -e1, e1 * s, one};
    CliffordMatrix2<S> CI{one, e1, e1 * -s, one};
    CliffordMatrix2<S> T{one, e0, e0, one};
    CliffordMatrix2<S> TI{one, -e0, -e0, one};
    return {C, CI, C * T, TI * CI};
}

/// Exponential of the subgroup generator at parameter t:
/// A -> diag(e^t, e^-t), N -> [[1, t e0], [0, 1]],
/// K -> [[cos t, sin t e0], [sin t e0, cos t]].
template <class S>
CliffordMatrix2<S> subgroup_exp(Subgroup s, const S& t, const Metric& metric) {
    using MV = Multivector<S>;
    using std::cos;
    using std::exp;
    using std::sin;
    const auto one = MV::scalar(metric, S(1.0));
    const auto zero = MV(metric);
    const auto e0 = MV::unit(metric, 0);
    switch (s) {
        case Subgroup::A:
            return {MV::scalar(metric, exp(t)), zero, zero, MV::scalar(metric, exp(-t))};
        case Subgroup::N:
            return {one, e0 * t, zero, one};
        case Subgroup::K: {
            auto c = MV::scalar(metric, cos(t));
            auto se0 = e0 * sin(t);
            return {c, se0, se0, c};
        }
    }
    return identity_matrix<S>(metric);
}

/// Moebius action of a subgroup exponential in one of the five pictures.
template <class S>
Point2<S> moebius_family(Subgroup s, MetricKind kind, MoebiusVariant variant, const S& t,
                         const PlanePoint& p) {
    const Metric m = plane_metric(kind);
    const auto exp_mat = subgroup_exp<S>(s, t, m);
    const Point2<S> sp{S(p.u), S(p.v)};
    if (variant == MoebiusVariant::direct) return moebius_map(exp_mat, sp, m);
    const auto cayley = cayley_matrices<S>(kind);
    switch (variant) {
        case MoebiusVariant::cayley_op: return moebius_map(cayley.C * exp_mat * cayley.CI, sp, m);
        case MoebiusVariant::cayley1_op:
            return moebius_map(cayley.C1 * exp_mat * cayley.C1I, sp, m);
        case MoebiusVariant::cayley_point: return moebius_map(cayley.C * exp_mat, sp, m);
        case MoebiusVariant::cayley1_point: return moebius_map(cayley.C1 * exp_mat, sp, m);
        default: return moebius_map(exp_mat, sp, m);
    }
}

struct FieldVec {
    double du = 0.0;
    double dv = 0.0;
};

/// Derived vector field of the family at p: the t-derivative of the action
/// at t = 0, computed exactly by evaluating over dual numbers.
inline FieldVec vector_field(Subgroup s, MetricKind kind, MoebiusVariant variant,
                             const PlanePoint& p) {
    const auto image = moebius_family<Dual>(s, kind, variant, dual_seed(0.0), p);
    return {image.u.de, image.v.de};
}

}  // namespace eph
