#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "ephplane/errors.hpp"

namespace eph {

/// Hard cap on generator count; 2^n coefficients stay trivially affordable.
inline constexpr int kMaxDimension = 8;

/// Diagonal metric of a Clifford algebra: n generators e_k with
/// e_k^2 = diag[k] and e_i e_j = -e_j e_i for i != j.
class Metric {
public:
    explicit Metric(std::vector<double> diag) : diag_(std::move(diag)) {
        if (diag_.empty() || diag_.size() > static_cast<std::size_t>(kMaxDimension)) {
            throw MetricMismatchError("metric dimension out of range [1, " +
                                      std::to_string(kMaxDimension) + "]: " +
                                      std::to_string(diag_.size()));
        }
        for (double d : diag_) {
            if (!std::isfinite(d)) throw MetricMismatchError("non-finite metric entry");
        }
    }

    int dimension() const { return static_cast<int>(diag_.size()); }
    std::size_t blade_count() const { return std::size_t{1} << diag_.size(); }

    double diag(int k) const {
        if (k < 0 || k >= dimension()) throw IndexError("generator index out of range");
        return diag_[static_cast<std::size_t>(k)];
    }

    friend bool operator==(const Metric&, const Metric&) = default;

private:
    std::vector<double> diag_;
};

}  // namespace eph
