#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fadespec/dist/nakagami.hpp"
#include "fadespec/dist/wigner.hpp"
#include "fadespec/gof/nakagami_fit.hpp"
#include "fadespec/numerics/random.hpp"

namespace fadespec::scenario {

// Piecewise-constant map from transmitter-receiver distance to fading
// figure m. Segment i covers (previous max_distance, max_distance_i]; the
// last segment must be unbounded so the profile covers all of (0, inf).
struct ProfileSegment {
    double max_distance;  // +inf for the last segment
    double m;
};

class DistanceProfile {
  public:
    explicit DistanceProfile(std::vector<ProfileSegment> segments)
        : segments_(std::move(segments)) {
        if (segments_.empty()) {
            throw std::domain_error("DistanceProfile: need at least one segment");
        }
        double previous = 0.0;
        for (std::size_t i = 0; i < segments_.size(); ++i) {
            const ProfileSegment& segment = segments_[i];
            if (!(segment.m >= 0.5)) {
                throw std::domain_error("DistanceProfile: every segment needs m >= 0.5");
            }
            const bool last = i + 1 == segments_.size();
            if (last) {
                if (!std::isinf(segment.max_distance)) {
                    throw std::domain_error(
                        "DistanceProfile: last segment must be unbounded");
                }
            } else {
                if (!(segment.max_distance > previous) || !std::isfinite(segment.max_distance)) {
                    throw std::domain_error(
                        "DistanceProfile: segment bounds must be finite and ascending");
                }
                previous = segment.max_distance;
            }
        }
    }

    /// Highway measurement profile: m = 3 up to 50 m, 1.5 up to 150 m, 1 beyond.
    static DistanceProfile highway_default() {
        return DistanceProfile({{50.0, 3.0},
                                {150.0, 1.5},
                                {std::numeric_limits<double>::infinity(), 1.0}});
    }

    /// Boundary distances belong to the nearer segment: d = 50 gives m = 3.
    double m_of_distance(double d) const {
        if (!(d > 0.0)) {
            throw std::domain_error("m_of_distance: distance must be positive");
        }
        for (const ProfileSegment& segment : segments_) {
            if (d <= segment.max_distance) return segment.m;
        }
        return segments_.back().m;  // unreachable: last segment is unbounded
    }

    const std::vector<ProfileSegment>& segments() const { return segments_; }

  private:
    std::vector<ProfileSegment> segments_;
};

inline double m_of_distance(const DistanceProfile& profile, double d) {
    return profile.m_of_distance(d);
}

struct WindowResult {
    double distance = 0.0;
    double m_true = 0.0;
    bool failed = false;
    std::string error;
    std::optional<gof::FitReport> fit;
};

/// One window per distance: n_per_window unit-mean Nakagami draws with the
/// profile's m, fitted and classified. Each window consumes its own
/// sub-stream keyed by the rank of its distance in descending order, so a
/// permuted distance list yields exactly permuted results. Failed windows
/// are reported in place; the run continues.
inline std::vector<WindowResult> run_transition_scenario(
    numerics::RandomStream& stream, const DistanceProfile& profile,
    std::span<const double> distances, std::size_t n_per_window, double tol_beta) {
    if (distances.empty()) {
        throw std::domain_error("run_transition_scenario: empty distance list");
    }
    if (n_per_window < 100) {
        throw std::domain_error("run_transition_scenario: need n_per_window >= 100");
    }
    for (double d : distances) {
        if (!(d > 0.0)) {
            throw std::domain_error("run_transition_scenario: distances must be positive");
        }
    }

    // Rank of each distance in descending order; ranks must be unambiguous.
    std::vector<std::size_t> order(distances.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return distances[a] > distances[b];
    });
    std::vector<std::size_t> rank(distances.size());
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (pos > 0 && distances[order[pos]] == distances[order[pos - 1]]) {
            throw std::domain_error("run_transition_scenario: distances must be distinct");
        }
        rank[order[pos]] = pos;
    }

    std::vector<WindowResult> results(distances.size());
    for (std::size_t i = 0; i < distances.size(); ++i) {
        WindowResult& window = results[i];
        window.distance = distances[i];
        try {
            window.m_true = profile.m_of_distance(distances[i]);
            numerics::RandomStream window_stream(stream.seed(),
                                                 stream.stream_index() + rank[i]);
            const dist::NakagamiParams params(window.m_true,
                                              dist::omega_unit(window.m_true));
            const std::vector<double> samples =
                dist::nakagami_sample(window_stream, params, n_per_window);
            window.fit = gof::fit_report(samples, tol_beta);
        } catch (const std::exception& e) {
            window.failed = true;
            window.error = e.what();
        }
    }
    return results;
}

}  // namespace fadespec::scenario
