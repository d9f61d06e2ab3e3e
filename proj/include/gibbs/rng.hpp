#ifndef GIBBS_RNG_HPP
#define GIBBS_RNG_HPP

#include <cmath>
#include <cstdint>

#include "gibbs/vec3.hpp"

namespace gibbs {

/// SplitMix64 finalizer; bijective on 64-bit words.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Seed-splitting rule used everywhere: the RNG for stream `index` under a
/// parent seed is CounterRng(mix64(parent_seed ^ index)). Streams derived this
/// way are independent of chunking and scheduling order.
inline std::uint64_t split_seed(std::uint64_t parent_seed, std::uint64_t stream_index) {
    return mix64(parent_seed ^ stream_index);
}

/// Counter-based generator: output i is mix64(key + i * gamma). The whole
/// stream is a pure function of (key, counter), so any draw can be reproduced
/// by position.
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : key_(seed) {}

    std::uint64_t next_u64() { return mix64(key_ + (++counter_) * kGamma); }

    /// Uniform on [0, 1) with 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform on (0, 1]; never returns 0 (safe under log).
    double uniform_pos() { return 1.0 - uniform(); }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via the Marsaglia polar method; one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    double exponential(double scale) { return -scale * std::log(uniform_pos()); }

    /// Gamma(3, scale) as a sum of three exponentials.
    double gamma3(double scale) {
        return -scale * std::log(uniform_pos() * uniform_pos() * uniform_pos());
    }

    /// Uniform direction on the unit sphere.
    Vec3 isotropic() {
        const double z = 2.0 * uniform() - 1.0;
        const double phi = 2.0 * M_PI * uniform();
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {r * std::cos(phi), r * std::sin(phi), z};
    }

    std::uint64_t key() const { return key_; }

private:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gibbs

#endif
