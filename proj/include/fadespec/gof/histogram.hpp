#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fadespec::gof {

// Density-normalized histogram: sum over bins of density * width is 1
// whenever any data fell inside the range. Out-of-range values are dropped,
// and sample_count reports only the retained points.
struct Histogram {
    std::vector<double> bin_edges;  // bins + 1 ascending edges
    std::vector<double> densities;
    std::size_t sample_count = 0;
};

inline Histogram histogram(std::span<const double> data, std::size_t bins,
                           std::optional<std::pair<double, double>> range = {}) {
    if (data.empty()) {
        throw std::domain_error("histogram: empty data");
    }
    if (bins < 1) {
        throw std::domain_error("histogram: need at least one bin");
    }
    double lo, hi;
    if (range) {
        lo = range->first;
        hi = range->second;
    } else {
        const auto [min_it, max_it] = std::minmax_element(data.begin(), data.end());
        lo = *min_it;
        hi = *max_it;
    }
    if (!(lo < hi)) {
        throw std::domain_error("histogram: range must satisfy lo < hi");
    }

    Histogram result;
    result.bin_edges.resize(bins + 1);
    for (std::size_t i = 0; i <= bins; ++i) {
        result.bin_edges[i] =
            lo + (hi - lo) * (static_cast<double>(i) / static_cast<double>(bins));
    }
    result.bin_edges.back() = hi;

    std::vector<std::size_t> counts(bins, 0);
    std::size_t retained = 0;
    for (double x : data) {
        if (x < lo || x > hi) continue;
        auto index = static_cast<std::size_t>((x - lo) / (hi - lo) * static_cast<double>(bins));
        index = std::min(index, bins - 1);  // x == hi lands in the last bin
        ++counts[index];
        ++retained;
    }
    result.sample_count = retained;
    result.densities.resize(bins, 0.0);
    if (retained > 0) {
        for (std::size_t i = 0; i < bins; ++i) {
            const double width = result.bin_edges[i + 1] - result.bin_edges[i];
            result.densities[i] =
                static_cast<double>(counts[i]) / (static_cast<double>(retained) * width);
        }
    }
    return result;
}

}  // namespace fadespec::gof
