#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace fadespec::gof {

struct KsReport {
    double statistic = 0.0;
    std::size_t n = 0;
    double p_value = 0.0;
};

/// Two-sided Kolmogorov-Smirnov statistic of data against a reference CDF:
/// D = sup_i max(i/n - F(x_(i)), F(x_(i)) - (i-1)/n).
template <class Cdf>
double ks_statistic(std::span<const double> data, Cdf&& cdf) {
    if (data.empty()) {
        throw std::domain_error("ks_statistic: empty data");
    }
    std::vector<double> sorted(data.begin(), data.end());
    std::sort(sorted.begin(), sorted.end());
    const auto n = static_cast<double>(sorted.size());
    double d = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = cdf(sorted[i]);
        const double upper = static_cast<double>(i + 1) / n - f;
        const double lower = f - static_cast<double>(i) / n;
        d = std::max({d, upper, lower});
    }
    return d;
}

/// Asymptotic p-value: Q(lambda) = 2 sum_k (-1)^(k-1) exp(-2 k^2 lambda^2)
/// at lambda = sqrt(n) D, truncated once terms drop below 1e-12.
inline double ks_pvalue(double d, std::size_t n) {
    if (n < 1) {
        throw std::domain_error("ks_pvalue: n must be >= 1");
    }
    if (!(d >= 0.0 && d <= 1.0)) {
        throw std::domain_error("ks_pvalue: statistic must lie in [0, 1]");
    }
    const double lambda = std::sqrt(static_cast<double>(n)) * d;
    if (lambda < 1e-8) return 1.0;
    const double rate = 2.0 * lambda * lambda;
    double sum = 0.0;
    double sign = 1.0;
    for (std::size_t k = 1;; ++k) {
        const double term = std::exp(-rate * static_cast<double>(k) * static_cast<double>(k));
        sum += sign * term;
        if (term < 1e-12) break;
        sign = -sign;
    }
    return std::clamp(2.0 * sum, 0.0, 1.0);
}

template <class Cdf>
KsReport ks_test(std::span<const double> data, Cdf&& cdf) {
    KsReport report;
    report.statistic = ks_statistic(data, cdf);
    report.n = data.size();
    report.p_value = ks_pvalue(report.statistic, report.n);
    return report;
}

}  // namespace fadespec::gof
