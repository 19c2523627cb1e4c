#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>

namespace fadespec::numerics {

/// Compensated (Neumaier) summation; error is O(eps) independent of length.
inline double compensated_sum(std::span<const double> values) {
    double sum = 0.0;
    double compensation = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    return sum + compensation;
}

inline double mean(std::span<const double> values) {
    if (values.empty()) {
        throw std::domain_error("mean: empty input");
    }
    return compensated_sum(values) / static_cast<double>(values.size());
}

}  // namespace fadespec::numerics
