#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "fadespec/error.hpp"
#include "fadespec/numerics/summation.hpp"
#include "fadespec/rmt/eigenvalues.hpp"
#include "fadespec/rmt/matrix_sampling.hpp"

namespace fadespec::rmt {

enum class SpacingProvenance { TwoByTwoExact, UnfoldedBulk };

// Nearest-neighbor spacings normalized so the empirical mean is exactly 1
// (final renormalization step, not just unfolding).
struct SpacingSeries {
    std::vector<double> spacings;
    SpacingProvenance provenance;
};

namespace detail {

inline void renormalize_to_unit_mean(std::vector<double>& spacings) {
    const double m = numerics::mean(spacings);
    if (!(m > 0.0)) {
        throw numeric_error("spacings: cannot renormalize, mean spacing is not positive");
    }
    for (double& s : spacings) s /= m;
}

}  // namespace detail

/// Spacings of `count` independent minimal-size members: 2x2 for GOE/GUE,
/// the n = 2 quaternionic (4x4 complex) form for GSE. Exactly
/// surmise-distributed up to the unit-mean renormalization.
inline SpacingSeries spacings_2x2(numerics::RandomStream& stream,
                                  dist::EnsembleKind kind, std::size_t count) {
    if (count < 2) {
        throw std::domain_error("spacings_2x2: need at least 2 samples");
    }
    std::vector<double> gaps(count);
    for (double& gap : gaps) {
        const GaussianMatrixSample sample = sample_matrix(stream, kind, 2);
        const SpectralData data = spectrum(sample);
        gap = data.eigenvalues[1] - data.eigenvalues[0];
    }
    detail::renormalize_to_unit_mean(gaps);
    return {std::move(gaps), SpacingProvenance::TwoByTwoExact};
}

/// Polynomial unfolding: least-squares fit of N(lambda) ~ degree-`degree`
/// polynomial through the staircase points (lambda_i, i - 1/2), spacings of
/// the fitted values with `trim_fraction` of levels dropped at each spectral
/// edge, renormalized to unit mean. Throws numeric_error if the fitted
/// staircase is decreasing anywhere on the retained range (lower the degree).
inline SpacingSeries unfold(std::span<const double> eigenvalues, int degree = 7,
                            double trim_fraction = 0.1) {
    if (degree < 1) {
        throw std::domain_error("unfold: polynomial degree must be >= 1");
    }
    if (!(trim_fraction >= 0.0 && trim_fraction <= 0.4)) {
        throw std::domain_error("unfold: trim_fraction must lie in [0, 0.4]");
    }
    if (!std::is_sorted(eigenvalues.begin(), eigenvalues.end())) {
        throw std::domain_error("unfold: eigenvalues must be ascending");
    }
    std::vector<double> levels(eigenvalues.begin(), eigenvalues.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    const std::size_t n = levels.size();
    if (n < static_cast<std::size_t>(degree) + 10) {
        throw std::domain_error("unfold: need at least degree + 10 distinct eigenvalues");
    }

    // Fit in a variable scaled to [-1, 1]; this keeps the Vandermonde matrix
    // well conditioned and makes the fit invariant under positive rescaling
    // of the spectrum.
    const double lo = levels.front();
    const double hi = levels.back();
    const double half_width = 0.5 * (hi - lo);
    const double center = 0.5 * (hi + lo);
    Eigen::MatrixXd design(n, degree + 1);
    Eigen::VectorXd staircase(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = (levels[i] - center) / half_width;
        double power = 1.0;
        for (int k = 0; k <= degree; ++k) {
            design(i, k) = power;
            power *= t;
        }
        staircase(i) = static_cast<double>(i) + 0.5;  // midpoint of the jump
    }
    const Eigen::VectorXd coeffs = design.colPivHouseholderQr().solve(staircase);
    const Eigen::VectorXd unfolded = design * coeffs;

    const auto trim = static_cast<std::size_t>(trim_fraction * static_cast<double>(n));
    const std::size_t first = trim;
    const std::size_t last = n - trim;  // exclusive
    if (last - first < 2) {
        throw std::domain_error("unfold: too few levels retained after trimming");
    }
    std::vector<double> spacings;
    spacings.reserve(last - first - 1);
    for (std::size_t i = first + 1; i < last; ++i) {
        const double gap = unfolded(i) - unfolded(i - 1);
        if (gap < 0.0) {
            throw numeric_error("unfold: fitted staircase is not monotone on the bulk");
        }
        spacings.push_back(gap);
    }
    detail::renormalize_to_unit_mean(spacings);
    return {std::move(spacings), SpacingProvenance::UnfoldedBulk};
}

/// Concatenate series of identical provenance and renormalize to unit mean.
inline SpacingSeries pool_spacings(std::span<const SpacingSeries> series) {
    if (series.empty()) {
        throw std::domain_error("pool_spacings: empty input");
    }
    const SpacingProvenance provenance = series.front().provenance;
    std::vector<double> pooled;
    for (const SpacingSeries& s : series) {
        if (s.provenance != provenance) {
            throw std::domain_error("pool_spacings: mixed provenance tags");
        }
        pooled.insert(pooled.end(), s.spacings.begin(), s.spacings.end());
    }
    detail::renormalize_to_unit_mean(pooled);
    return {std::move(pooled), provenance};
}

}  // namespace fadespec::rmt
