#pragma once

#include <cmath>
#include <cstdint>
#include <limits>

namespace cbm {

inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Mixes a base seed with a stream index so that derived streams
/// (replications, optimizer evaluations, table builds) do not overlap.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0xA0761D6478BD642FULL * (index + 1));
    splitmix64(s);
    return splitmix64(s);
}

/// xoshiro256++ with distribution helpers. One stream per concurrent task;
/// a stream is never shared across threads.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : s_) word = splitmix64(sm);
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform draw in the open interval (0,1); never returns 0 or 1,
    /// so logs of it are always finite.
    double uniform() {
        return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
    }

    /// rate == 0 is interpreted as "never": returns +infinity.
    double exponential(double rate) {
        if (rate <= 0.0) return std::numeric_limits<double>::infinity();
        return -std::log(uniform()) / rate;
    }

    /// Standard normal via the Marsaglia polar method (no cached spare,
    /// keeping the stream state a pure function of draw count).
    double normal() {
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        return u * std::sqrt(-2.0 * std::log(s) / s);
    }

    /// Gamma(shape, rate) via Marsaglia & Tsang (2000) squeeze rejection.
    /// Shapes below 1 use the boost X*U^(1/shape) with X ~ Gamma(shape+1).
    double gamma(double shape, double rate) {
        const double boosted = shape < 1.0 ? shape + 1.0 : shape;
        const double d = boosted - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        double z, v, u;
        for (;;) {
            do {
                z = normal();
                v = 1.0 + c * z;
            } while (v <= 0.0);
            v = v * v * v;
            u = uniform();
            if (u < 1.0 - 0.0331 * z * z * z * z) break;
            if (std::log(u) < 0.5 * z * z + d * (1.0 - v + std::log(v))) break;
        }
        double x = d * v;
        if (shape < 1.0) x *= std::pow(uniform(), 1.0 / shape);
        return x / rate;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::uint64_t s_[4];
};

}  // namespace cbm
