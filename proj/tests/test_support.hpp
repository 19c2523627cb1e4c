#pragma once

// Test-local reference implementations and frozen constants. These are
// written straight from the closed forms, independently of the library
// code, so a disagreement inculpates the implementation under test.

#include <algorithm>
#include <cmath>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace testsupport {

/// Kolmogorov tail Q(lambda) through the Jacobi-theta dual series
/// Q = 1 - sqrt(2 pi)/lambda * sum_{j odd} exp(-j^2 pi^2 / (8 lambda^2)),
/// complementary to the alternating series the library uses.
inline double kolmogorov_q_theta(double lambda) {
    if (lambda <= 0.0) return 1.0;
    const double pi = 3.14159265358979323846;
    double sum = 0.0;
    for (int j = 1; j < 200; j += 2) {
        const double term = std::exp(-(j * pi) * (j * pi) / (8.0 * lambda * lambda));
        sum += term;
        if (term < 1e-16 * sum) break;
    }
    const double q = 1.0 - std::sqrt(2.0 * pi) / lambda * sum;
    return std::clamp(q, 0.0, 1.0);
}

/// Two-sided ECDF-vs-CDF sup distance, scanned directly.
template <class Cdf>
double ks_distance(std::vector<double> data, Cdf&& cdf) {
    std::sort(data.begin(), data.end());
    const double n = static_cast<double>(data.size());
    double d = 0.0;
    for (std::size_t i = 0; i < data.size(); ++i) {
        const double f = cdf(data[i]);
        d = std::max(d, (static_cast<double>(i) + 1.0) / n - f);
        d = std::max(d, f - static_cast<double>(i) / n);
    }
    return d;
}

/// Quantile of a continuous CDF by plain bisection.
inline double quantile_bisect(const std::function<double(double)>& cdf, double p, double lo,
                              double hi) {
    if (!(cdf(lo) <= p && p <= cdf(hi))) {
        throw std::invalid_argument("quantile_bisect: p not bracketed");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (cdf(mid) < p) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

struct MeanVar {
    double mean;
    double var;  // population variance
};

inline MeanVar mean_var(std::span<const double> xs) {
    double sum = 0.0;
    for (double x : xs) sum += x;
    const double mean = sum / static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    return {mean, ss / static_cast<double>(xs.size())};
}

// Frozen high-precision evaluations of closed forms (64-bit nearest).
namespace ref {

inline constexpr double kLnSqrtPi = 0.5723649429247001;         // ln Gamma(1/2)
inline constexpr double kLn24 = 3.1780538303479458;             // ln Gamma(5)
inline constexpr double kNegEulerGamma = -0.5772156649015329;   // psi(1)
inline constexpr double kOneMinusEulerGamma = 0.4227843350984671;  // psi(2)
inline constexpr double kDigammaHalf = -1.9635100260214235;     // psi(1/2)
inline constexpr double kOneMinusInvE = 0.6321205588285577;     // P(1,1)
inline constexpr double kErf1 = 0.8427007929497149;             // P(1/2,1)
inline constexpr double kTwoOverE = 0.7357588823428847;         // Rayleigh pdf at 1
inline constexpr double kSqrtTwoOverPi = 0.7978845608028654;    // half-normal at 0
inline constexpr double kSqrtPiOverTwo = 0.8862269254527580;    // Rayleigh mean
inline constexpr double kSurmiseBeta1At1 = 0.7161859363405692;  // (pi/2) e^(-pi/4)
inline constexpr double kKolmogorovQ1p358 = 0.05002679733444701;
// Nakagami density, m = 2.5, Omega = 45 pi/128, x = 1.3:
inline constexpr double kNakagamiM25At1p3 = 0.7224301381777689;
inline constexpr double kSurmiseA2p3 = 3.9675280086931164;  // a_beta, beta = 2.3
inline constexpr double kSurmiseB2p3 = 1.4210171581647026;  // b_beta, beta = 2.3
inline constexpr double kOmegaUnitM3 = 1.0864977448406722;  // 3 Gamma(3)^2/Gamma(3.5)^2

// Raw moments mu_k = E s^k of the surmise density, mu_k =
// Gamma((beta+1+k)/2) / (Gamma((beta+1)/2) b^(k/2)).
inline constexpr double kBeta1Mu2 = 1.2732395447351627;
inline constexpr double kBeta1Mu4 = 3.2422778765548087;
inline constexpr double kBeta2Mu2 = 1.1780972450961724;
inline constexpr double kBeta2Mu4 = 2.3131885315053184;
inline constexpr double kBeta4Mu2 = 1.1044661672776617;
inline constexpr double kBeta4Mu4 = 1.7077837205254109;

}  // namespace ref

}  // namespace testsupport
