#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "fadespec/dist/wigner.hpp"
#include "fadespec/error.hpp"
#include "fadespec/gof/kolmogorov_smirnov.hpp"
#include "fadespec/numerics/special_functions.hpp"
#include "fadespec/numerics/summation.hpp"

namespace fadespec::gof {

enum class EnsembleClass { GOE, GUE, GSE, Unclassified };

inline std::string_view class_name(EnsembleClass c) {
    switch (c) {
        case EnsembleClass::GOE: return "GOE";
        case EnsembleClass::GUE: return "GUE";
        case EnsembleClass::GSE: return "GSE";
        case EnsembleClass::Unclassified: return "Unclassified";
    }
    throw std::domain_error("class_name: invalid EnsembleClass");
}

namespace detail {

inline std::vector<double> squared(std::span<const double> samples) {
    std::vector<double> y(samples.size());
    std::transform(samples.begin(), samples.end(), y.begin(),
                   [](double x) { return x * x; });
    return y;
}

}  // namespace detail

/// Inverse normalized variance of the squared envelope:
/// m_hat = (mean y)^2 / var(y) with y = x^2 and population (1/n) variance.
inline double estimate_m_moment(std::span<const double> samples) {
    if (samples.size() < 10) {
        throw std::domain_error("estimate_m_moment: need at least 10 samples");
    }
    const std::vector<double> y = detail::squared(samples);
    const double mean_y = numerics::mean(y);
    std::vector<double> deviations(y.size());
    std::transform(y.begin(), y.end(), deviations.begin(), [mean_y](double v) {
        const double d = v - mean_y;
        return d * d;
    });
    const double variance = numerics::mean(deviations);
    if (!(variance > 0.0)) {
        throw numeric_error("estimate_m_moment: zero variance in squared samples");
    }
    return mean_y * mean_y / variance;
}

/// Gamma-shape maximum likelihood on y = x^2: solves
/// ln m - psi(m) = ln(mean y) - mean(ln y) by bisection on [0.25, 1e4].
inline double estimate_m_mle(std::span<const double> samples) {
    if (samples.size() < 10) {
        throw std::domain_error("estimate_m_mle: need at least 10 samples");
    }
    for (double x : samples) {
        if (!(x > 0.0)) {
            throw std::domain_error("estimate_m_mle: samples must be positive");
        }
    }
    const std::vector<double> y = detail::squared(samples);
    std::vector<double> log_y(y.size());
    std::transform(y.begin(), y.end(), log_y.begin(), [](double v) { return std::log(v); });
    const double rhs = std::log(numerics::mean(y)) - numerics::mean(log_y);
    if (!(rhs > 0.0)) {
        throw numeric_error("estimate_m_mle: degenerate likelihood equation");
    }
    auto objective = [rhs](double m) {
        return std::log(m) - numerics::digamma(m) - rhs;
    };
    double lo = 0.25;
    double hi = 1e4;
    double f_lo = objective(lo);
    double f_hi = objective(hi);
    if (!(f_lo > 0.0) || !(f_hi < 0.0)) {
        throw numeric_error("estimate_m_mle: no sign change in bracket [0.25, 1e4]");
    }
    while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        if (objective(mid) > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

/// Nearest ensemble on the beta axis (beta_hat = 2 m_hat - 1), Unclassified
/// beyond tol_beta; exact midpoint ties go to the smaller beta.
inline EnsembleClass classify_ensemble(double m_hat, double tol_beta) {
    if (!(tol_beta > 0.0)) {
        throw std::domain_error("classify_ensemble: tol_beta must be positive");
    }
    const double beta_hat = 2.0 * m_hat - 1.0;
    constexpr double kBetas[3] = {1.0, 2.0, 4.0};
    constexpr EnsembleClass kClasses[3] = {EnsembleClass::GOE, EnsembleClass::GUE,
                                           EnsembleClass::GSE};
    int best = 0;
    for (int i = 1; i < 3; ++i) {
        if (std::abs(beta_hat - kBetas[i]) < std::abs(beta_hat - kBetas[best])) {
            best = i;  // ties keep the smaller beta
        }
    }
    if (std::abs(beta_hat - kBetas[best]) <= tol_beta) {
        return kClasses[best];
    }
    return EnsembleClass::Unclassified;
}

struct FitReport {
    double m_hat_moment = 0.0;
    double m_hat_mle = 0.0;
    double beta_hat = 0.0;  // 2 * m_hat_mle - 1
    KsReport ks;
    EnsembleClass classification = EnsembleClass::Unclassified;
};

/// Full fit: both estimators, KS of the samples against the fitted envelope
/// distribution (shape m_hat_mle, spread mean of x^2), classification.
inline FitReport fit_report(std::span<const double> samples, double tol_beta) {
    FitReport report;
    report.m_hat_moment = estimate_m_moment(samples);
    report.m_hat_mle = estimate_m_mle(samples);
    report.beta_hat = 2.0 * report.m_hat_mle - 1.0;
    const double omega_hat = numerics::mean(detail::squared(samples));
    // Gamma-based CDF form; stays valid even if m_hat strays below the
    // Nakagami domain floor of 0.5 on near-boundary data.
    const double m_hat = report.m_hat_mle;
    auto fitted_cdf = [m_hat, omega_hat](double x) {
        if (x <= 0.0) return 0.0;
        return numerics::reg_gamma_p(m_hat, m_hat * x * x / omega_hat);
    };
    report.ks = ks_test(samples, fitted_cdf);
    report.classification = classify_ensemble(report.m_hat_mle, tol_beta);
    return report;
}

}  // namespace fadespec::gof
