#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace fadespec::numerics {

// Seeded, replayable random stream. Equal (seed, stream_index) always
// reproduces the same draw sequence on a given build; distinct stream
// indices give statistically independent sub-streams for parallel work.
// Bit-exact agreement across implementations is not a goal.
class RandomStream {
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream_index = 0)
        : seed_(seed), stream_index_(stream_index) {
        std::seed_seq sequence{
            static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
            static_cast<std::uint32_t>(stream_index),
            static_cast<std::uint32_t>(stream_index >> 32)};
        engine_.seed(sequence);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream_index() const { return stream_index_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

  private:
    friend double standard_normal(RandomStream&);

    std::uint64_t seed_;
    std::uint64_t stream_index_;
    std::mt19937_64 engine_;
    double spare_normal_ = 0.0;
    bool has_spare_normal_ = false;
};

/// One N(0,1) variate by the Marsaglia polar method. The second variate of
/// each accepted pair is cached on the stream.
inline double standard_normal(RandomStream& stream) {
    if (stream.has_spare_normal_) {
        stream.has_spare_normal_ = false;
        return stream.spare_normal_;
    }
    while (true) {
        const double u = 2.0 * stream.next_double() - 1.0;
        const double v = 2.0 * stream.next_double() - 1.0;
        const double s = u * u + v * v;
        if (s >= 1.0 || s == 0.0) continue;
        const double factor = std::sqrt(-2.0 * std::log(s) / s);
        stream.spare_normal_ = v * factor;
        stream.has_spare_normal_ = true;
        return u * factor;
    }
}

/// One Gamma(shape, scale) variate. Marsaglia-Tsang squeeze for shape >= 1;
/// shapes in [0.25, 1) use the boost identity G(a) = G(a+1) * U^(1/a).
inline double gamma_sample(RandomStream& stream, double shape, double scale) {
    if (!(shape >= 0.25)) {
        throw std::domain_error("gamma_sample: shape must be >= 0.25, got " +
                                std::to_string(shape));
    }
    if (!(scale > 0.0)) {
        throw std::domain_error("gamma_sample: scale must be positive, got " +
                                std::to_string(scale));
    }

    double boost = 1.0;
    double a = shape;
    if (a < 1.0) {
        double u = stream.next_double();
        while (u == 0.0) u = stream.next_double();
        boost = std::pow(u, 1.0 / a);
        a += 1.0;
    }

    const double d = a - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    while (true) {
        double x;
        double v;
        do {
            x = standard_normal(stream);
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = stream.next_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return boost * d * v * scale;
        }
        if (u > 0.0 && std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) {
            return boost * d * v * scale;
        }
    }
}

}  // namespace fadespec::numerics
