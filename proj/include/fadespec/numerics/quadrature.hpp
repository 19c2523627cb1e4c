#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fadespec/error.hpp"

namespace fadespec::numerics {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    std::int64_t evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 nodes and weights on [-1, 1] (QUADPACK dqk15).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double kronrod = 0.0;
    double error = 0.0;  // |Kronrod - Gauss|
};

template <class F>
PanelEstimate gk15_panel(F&& f, double lo, double hi) {
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    const double f_center = f(center);
    double kronrod = kKronrodWeights[7] * f_center;
    double gauss = kGaussWeights[3] * f_center;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * kGk15Nodes[i];
        const double f_sum = f(center - dx) + f(center + dx);
        kronrod += kKronrodWeights[i] * f_sum;
        if (i % 2 == 1) {  // odd-index nodes are the embedded Gauss-7 nodes
            gauss += kGaussWeights[i / 2] * f_sum;
        }
    }
    kronrod *= half;
    gauss *= half;
    return {kronrod, std::abs(kronrod - gauss)};
}

struct Interval {
    double lo, hi, value, error;
};

template <class F>
QuadratureResult adaptive_gk15(F&& f, double lower, double upper, double tol) {
    constexpr int kMaxIntervals = 4096;
    QuadratureResult result;

    auto eval_panel = [&](double lo, double hi) {
        result.evaluations += 15;
        return gk15_panel(f, lo, hi);
    };

    std::vector<Interval> intervals;
    const PanelEstimate whole = eval_panel(lower, upper);
    intervals.push_back({lower, upper, whole.kronrod, whole.error});

    while (true) {
        double total_error = 0.0;
        double total_value = 0.0;
        std::size_t worst = 0;
        for (std::size_t i = 0; i < intervals.size(); ++i) {
            total_value += intervals[i].value;
            total_error += intervals[i].error;
            if (intervals[i].error > intervals[worst].error) worst = i;
        }
        if (total_error <= tol) {
            result.value = total_value;
            result.abs_error_estimate = total_error;
            return result;
        }
        if (intervals.size() >= kMaxIntervals) {
            throw numeric_error("integrate: failed to reach tolerance within panel budget");
        }
        const Interval split = intervals[worst];
        const double mid = 0.5 * (split.lo + split.hi);
        if (!(split.lo < mid && mid < split.hi)) {
            throw numeric_error("integrate: interval collapsed below machine precision");
        }
        const PanelEstimate left = eval_panel(split.lo, mid);
        const PanelEstimate right = eval_panel(mid, split.hi);
        intervals[worst] = {split.lo, mid, left.kronrod, left.error};
        intervals.push_back({mid, split.hi, right.kronrod, right.error});
    }
}

}  // namespace detail

/// Integrate f over [lower, upper] to absolute tolerance tol. A non-finite
/// upper bound selects the semi-infinite rule via the map x = t / (1 - t).
template <class F>
QuadratureResult integrate(F&& f, double lower, double upper, double tol) {
    if (!(tol > 0.0)) {
        throw std::domain_error("integrate: tolerance must be positive");
    }
    if (!std::isfinite(lower)) {
        throw std::domain_error("integrate: lower bound must be finite");
    }
    if (std::isinf(upper)) {
        // x = lower + t/(1-t) maps t in [0,1) onto [lower, inf).
        auto transformed = [&f, lower](double t) {
            const double u = 1.0 - t;
            const double x = lower + t / u;
            return f(x) / (u * u);
        };
        return detail::adaptive_gk15(transformed, 0.0, 1.0, tol);
    }
    if (!(lower < upper)) {
        throw std::domain_error("integrate: bounds must satisfy lower < upper");
    }
    return detail::adaptive_gk15(f, lower, upper, tol);
}

}  // namespace fadespec::numerics
