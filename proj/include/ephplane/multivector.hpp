#pragma once

#include <bit>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "ephplane/dual.hpp"
#include "ephplane/errors.hpp"
#include "ephplane/metric.hpp"

namespace eph {

namespace tol {
/// Grade-purity threshold for scalar/vector extraction.
inline constexpr double grade = 1e-9;
/// Below this the conjugate squared norm counts as zero (no inverse).
inline constexpr double zero = 1e-12;
/// Residual allowed when validating a * inverse(a) == 1.
inline constexpr double inverse = 1e-9;
}  // namespace tol

/// Sign of moving the juxtaposed blade product e_A e_B into canonical
/// ascending order: (-1)^(number of generator transpositions).
inline int reorder_sign(unsigned a, unsigned b) {
    int swaps = 0;
    for (a >>= 1; a != 0; a >>= 1) swaps += std::popcount(a & b);
    return (swaps & 1) ? -1 : 1;
}

/// Dense multivector over a diagonal-metric Clifford algebra.
///
/// Coefficient m multiplies the blade e_{k1}^...^e_{kr} named by the set
/// bits of m in ascending generator order; index 0 is the scalar part.
/// The scalar type S is either double or Dual; all operations are pure.
template <class S>
class Multivector {
public:
    /// Zero element of the algebra over `metric`.
    explicit Multivector(Metric metric)
        : metric_(std::move(metric)), coeff_(metric_.blade_count()) {}

    Multivector(Metric metric, std::vector<S> coeff)
        : metric_(std::move(metric)), coeff_(std::move(coeff)) {
        if (coeff_.size() != metric_.blade_count()) {
            throw MetricMismatchError("coefficient count does not match 2^n");
        }
    }

    static Multivector scalar(const Metric& metric, S value) {
        Multivector r(metric);
        r.coeff_[0] = value;
        return r;
    }

    /// Generator e_k.
    static Multivector unit(const Metric& metric, int k) {
        if (k < 0 || k >= metric.dimension()) {
            throw IndexError("unit index " + std::to_string(k) + " out of range");
        }
        Multivector r(metric);
        r.coeff_[std::size_t{1} << k] = S(1.0);
        return r;
    }

    const Metric& metric() const { return metric_; }
    int dimension() const { return metric_.dimension(); }
    std::size_t size() const { return coeff_.size(); }
    const S& operator[](std::size_t blade) const { return coeff_[blade]; }
    const std::vector<S>& coefficients() const { return coeff_; }

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    Metric metric_;
    std::vector<S> coeff_;
};

template <class S>
void require_same_metric(const Multivector<S>& a, const Multivector<S>& b) {
    if (!(a.metric() == b.metric())) throw MetricMismatchError("operands carry different metrics");
}

template <class S>
Multivector<S> operator+(const Multivector<S>& a, const Multivector<S>& b) {
    require_same_metric(a, b);
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
    return {a.metric(), std::move(out)};
}

template <class S>
Multivector<S> operator-(const Multivector<S>& a, const Multivector<S>& b) {
    require_same_metric(a, b);
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
    return {a.metric(), std::move(out)};
}

template <class S>
Multivector<S> operator-(const Multivector<S>& a) {
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = -a[i];
    return {a.metric(), std::move(out)};
}

template <class S>
Multivector<S> scale(const Multivector<S>& a, const S& s) {
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] * s;
    return {a.metric(), std::move(out)};
}

template <class S>
Multivector<S> operator*(const Multivector<S>& a, std::type_identity_t<S> s) {
    return scale(a, s);
}

template <class S>
Multivector<S> operator*(std::type_identity_t<S> s, const Multivector<S>& a) {
    return scale(a, s);
}

/// Geometric product. Equal generators contract to diag[k]; distinct ones
/// anticommute, so unit(i)*unit(j) == -unit(j)*unit(i) and
/// unit(k)*unit(k) == diag[k] * scalar(1). Output is always in canonical
/// ascending-generator blade form.
template <class S>
Multivector<S> gp(const Multivector<S>& a, const Multivector<S>& b) {
    require_same_metric(a, b);
    const Metric& m = a.metric();
    const unsigned count = static_cast<unsigned>(m.blade_count());
    std::vector<S> out(count, S{});
    for (unsigned i = 0; i < count; ++i) {
        if (a[i] == S{}) continue;
        for (unsigned j = 0; j < count; ++j) {
            if (b[j] == S{}) continue;
            double weight = reorder_sign(i, j);
            for (unsigned common = i & j; common != 0; common &= common - 1) {
                weight *= m.diag(std::countr_zero(common));
            }
            if (weight == 0.0) continue;
            out[i ^ j] += a[i] * b[j] * weight;
        }
    }
    return {m, std::move(out)};
}

template <class S>
Multivector<S> operator*(const Multivector<S>& a, const Multivector<S>& b) {
    return gp(a, b);
}

/// Keeps only coefficients of blades with exactly `grade` generators.
/// A grade above the dimension yields zero.
template <class S>
Multivector<S> grade_part(const Multivector<S>& a, int grade) {
    std::vector<S> out(a.size(), S{});
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::popcount(i) == grade) out[i] = a[i];
    }
    return {a.metric(), std::move(out)};
}

namespace detail {
template <class S>
Multivector<S> grade_signed(const Multivector<S>& a, int (*sign)(int)) {
    std::vector<S> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = sign(std::popcount(i)) < 0 ? -a[i] : a[i];
    }
    return {a.metric(), std::move(out)};
}
}  // namespace detail

/// Grade involution: every generator changes sign, so grade g picks up (-1)^g.
template <class S>
Multivector<S> prime(const Multivector<S>& a) {
    return detail::grade_signed(a, +[](int g) { return (g & 1) ? -1 : 1; });
}

/// Reversion: factors of each blade product in reverse order, (-1)^(g(g-1)/2).
template <class S>
Multivector<S> star(const Multivector<S>& a) {
    return detail::grade_signed(a, +[](int g) { return (g * (g - 1) / 2 % 2) ? -1 : 1; });
}

/// Clifford conjugation, prime of star: (-1)^(g(g+1)/2).
template <class S>
Multivector<S> bar(const Multivector<S>& a) {
    return detail::grade_signed(a, +[](int g) { return (g * (g + 1) / 2 % 2) ? -1 : 1; });
}

/// Sum v[k] * e_k.
template <class S>
Multivector<S> embed_vector(const Metric& metric, std::span<const S> v) {
    if (v.size() != static_cast<std::size_t>(metric.dimension())) {
        throw MetricMismatchError("component count does not match metric dimension");
    }
    Multivector<S> r(metric);
    std::vector<S> out(r.size(), S{});
    for (std::size_t k = 0; k < v.size(); ++k) out[std::size_t{1} << k] = v[k];
    return {metric, std::move(out)};
}

template <class S>
Multivector<S> embed_vector(const Metric& metric, const std::vector<S>& v) {
    return embed_vector(metric, std::span<const S>(v));
}

/// Components of a (numerically) pure grade-1 element. Where diag[k] is
/// nonzero the component comes from the anticommutator with e_k,
/// v_k = <a e_k + e_k a>_0 / (2 diag[k]); a null generator has no such
/// quotient and the blade coefficient is read directly instead.
template <class S>
std::vector<S> extract_vector(const Multivector<S>& a) {
    const Metric& m = a.metric();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::popcount(i) != 1 && coeff_abs(a[i]) > tol::grade) {
            throw NotVectorError("significant non-grade-1 content");
        }
    }
    std::vector<S> out(static_cast<std::size_t>(m.dimension()));
    for (int k = 0; k < m.dimension(); ++k) {
        if (m.diag(k) != 0.0) {
            auto ek = Multivector<S>::unit(m, k);
            auto anti = gp(a, ek) + gp(ek, a);
            out[static_cast<std::size_t>(k)] = anti[0] * (1.0 / (2.0 * m.diag(k)));
        } else {
            out[static_cast<std::size_t>(k)] = a[std::size_t{1} << k];
        }
    }
    return out;
}

/// Scalar coefficient; every other blade must be below the grade tolerance.
template <class S>
S scalar_part(const Multivector<S>& a) {
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (coeff_abs(a[i]) > tol::grade) throw NotScalarError("significant non-scalar content");
    }
    return a[0];
}

/// Signed squared norm <a bar(a)>_0; the product must be scalar.
template <class S>
S norm_squared(const Multivector<S>& a) {
    auto q = gp(a, bar(a));
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (coeff_abs(q[i]) > tol::grade) throw NotScalarError("norm: a*bar(a) is not scalar");
    }
    return q[0];
}

inline double norm(const Multivector<double>& a) { return std::sqrt(std::abs(norm_squared(a))); }

/// Inverse by conjugate, bar(a) / <a bar(a)>_0. Throws ZeroNormError when
/// the squared norm vanishes and NotInvertibleError when the construction
/// does not reproduce the identity within tolerance.
template <class S>
Multivector<S> inverse(const Multivector<S>& a) {
    auto q = gp(a, bar(a));
    for (std::size_t i = 1; i < q.size(); ++i) {
        if (coeff_abs(q[i]) > tol::grade) {
            throw NotInvertibleError("a*bar(a) is not scalar; conjugate inverse does not apply");
        }
    }
    const S nsq = q[0];
    if (std::abs(real_part(nsq)) <= tol::zero) throw ZeroNormError("zero squared norm");
    auto result = scale(bar(a), S(1.0) / nsq);
    auto check = gp(a, result);
    for (std::size_t i = 0; i < check.size(); ++i) {
        const double dev = i == 0 ? coeff_abs(check[0] - S(1.0)) : coeff_abs(check[i]);
        if (dev > tol::inverse) throw NotInvertibleError("inverse validation failed");
    }
    return result;
}

}  // namespace eph
