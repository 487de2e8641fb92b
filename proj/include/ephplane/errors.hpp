#pragma once

#include <stdexcept>
#include <string>

namespace eph {

/// Base class for all algebra-level failures.
struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Operands carry different metrics, or a metric is malformed.
struct MetricMismatchError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Generator / table index out of range.
struct IndexError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Conjugate squared norm is (numerically) zero; the element has no inverse.
/// Raised per evaluation, never trapped globally.
struct ZeroNormError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Significant non-scalar content where a pure scalar was required.
struct NotScalarError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Significant non-vector content where a pure grade-1 element was required.
struct NotVectorError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// The conjugate-based inverse failed its residual validation.
struct NotInvertibleError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// Parabola fit abscissae too close to distinguish.
struct DegenerateFitError : AlgebraError {
    using AlgebraError::AlgebraError;
};

/// File emission failure.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace eph
