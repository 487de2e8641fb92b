#pragma once

#include <cmath>

namespace eph {

/// Dual number re + de*eps with eps^2 = 0. Seeding de = 1 turns any
/// computation over these into an exact forward-mode derivative in re.
struct Dual {
    double re = 0.0;
    double de = 0.0;

    constexpr Dual() = default;
    constexpr Dual(double r) : re(r) {}
    constexpr Dual(double r, double d) : re(r), de(d) {}

    friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

/// The derivative seed: t = (t0, 1).
constexpr Dual dual_seed(double t0) { return Dual{t0, 1.0}; }

constexpr Dual operator-(const Dual& a) { return {-a.re, -a.de}; }

constexpr Dual operator+(const Dual& a, const Dual& b) { return {a.re + b.re, a.de + b.de}; }
constexpr Dual operator-(const Dual& a, const Dual& b) { return {a.re - b.re, a.de - b.de}; }
constexpr Dual operator*(const Dual& a, const Dual& b) {
    return {a.re * b.re, a.re * b.de + a.de * b.re};
}
constexpr Dual operator/(const Dual& a, const Dual& b) {
    return {a.re / b.re, (a.de * b.re - a.re * b.de) / (b.re * b.re)};
}

constexpr Dual& operator+=(Dual& a, const Dual& b) { return a = a + b; }
constexpr Dual& operator-=(Dual& a, const Dual& b) { return a = a - b; }
constexpr Dual& operator*=(Dual& a, const Dual& b) { return a = a * b; }
constexpr Dual& operator/=(Dual& a, const Dual& b) { return a = a / b; }

inline Dual exp(const Dual& a) {
    double e = std::exp(a.re);
    return {e, a.de * e};
}
inline Dual sin(const Dual& a) { return {std::sin(a.re), a.de * std::cos(a.re)}; }
inline Dual cos(const Dual& a) { return {std::cos(a.re), -a.de * std::sin(a.re)}; }
inline Dual sqrt(const Dual& a) {
    double s = std::sqrt(a.re);
    return {s, a.de / (2.0 * s)};
}

/// Value part of a scalar (identity on plain doubles).
constexpr double real_part(double s) { return s; }
constexpr double real_part(const Dual& s) { return s.re; }

/// Magnitude used by grade-purity checks; a dual is negligible only if
/// both its value and derivative parts are.
inline double coeff_abs(double s) { return std::abs(s); }
inline double coeff_abs(const Dual& s) { return std::max(std::abs(s.re), std::abs(s.de)); }

}  // namespace eph
