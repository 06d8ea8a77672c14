#pragma once

/**
 * @file rng.hpp
 * @brief Seeded random streams with platform-independent output.
 *
 * Every randomized routine in the library takes an explicit seed and derives
 * substreams by mixing, so results are reproducible bit-for-bit for a fixed
 * seed. The uniform/gaussian mappings are hand-rolled on top of mt19937_64
 * because the standard distributions are implementation-defined.
 */

#include <cmath>
#include <cstdint>
#include <random>

namespace dmp {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream_id) {
    return splitmix64(seed ^ splitmix64(stream_id + 0x6a09e667f3bcc909ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Derive an independent substream; deterministic in (seed, id).
    static Rng stream(std::uint64_t seed, std::uint64_t stream_id) {
        return Rng(mix_seed(seed, stream_id));
    }

    std::uint64_t next_u64() { return gen_(); }

    /// Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double a, double b) { return a + (b - a) * uniform01(); }

    /// Standard normal via Box-Muller.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform01();
        while (u1 <= 0.0) u1 = uniform01();
        const double u2 = uniform01();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 6.283185307179586476925286766559 * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace dmp
