// rng.hpp
#pragma once

#include <cstdint>
#include <random>

namespace robandit {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Per-replication seed: mix(seed + (index + 1) * golden_gamma).
// Depends only on (seed, index), so execution order cannot change results.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64_mix(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

// Deterministic random stream. mt19937_64 output is fixed by the standard,
// and the conversions below avoid the implementation-defined std::*_distribution.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on the open interval (0, 1): (k + 0.5) / 2^53.
    double uniform01() {
        const std::uint64_t k = engine_() >> 11;
        return (static_cast<double>(k) + 0.5) * 0x1.0p-53;
    }

    bool bernoulli(double p) { return uniform01() < p; }

    // Uniform index in [0, n) by rejection, n >= 1.
    std::uint64_t index(std::uint64_t n);

private:
    std::mt19937_64 engine_;
};

} // namespace robandit
