#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace gait {

/// Deterministic splittable pseudo-random stream (splitmix64 core).
///
/// std::mt19937 + std::normal_distribution produce implementation-defined
/// sequences; fixtures must be reproducible byte for byte, so both the
/// generator and the gaussian transform are pinned here.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : state_(seed) {}

    /// Independent child stream keyed by a label (FNV-1a of the label mixed in).
    RandomStream split(std::string_view key) const {
        std::uint64_t h = 1469598103934665603ULL;
        for (char c : key) {
            h ^= static_cast<std::uint8_t>(c);
            h *= 1099511628211ULL;
        }
        return RandomStream(mix(state_ ^ h));
    }

    RandomStream split(std::uint64_t key) const { return RandomStream(mix(state_ ^ mix(key))); }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform in [0, 1), 53-bit mantissa.
    double next_uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double next_uniform(double lo, double hi) { return lo + (hi - lo) * next_uniform(); }

    /// Standard normal via Box-Muller; consumes two uniforms per pair.
    double next_gaussian() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = next_uniform();
        double u2 = next_uniform();
        while (u1 <= 0.0) u1 = next_uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gait
