#pragma once

#include <cstdint>
#include <string_view>

namespace pqmet {

// splitmix64 (Steele/Lea/Flood). Chosen over std engines because the
// uint64 -> double mapping must be identical on every platform for
// byte-identical reports.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 bits.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Uniform integer in [0, n). Modulo bias is irrelevant at the n used here
    /// (point counts <= a few thousand).
    std::uint64_t below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

/// Deterministic per-module substream: mixes a tag (FNV-1a) into the run seed
/// so every module draws from its own stream of one seeded generator.
inline std::uint64_t substream_seed(std::uint64_t seed, std::string_view tag) {
    std::uint64_t h = 0xCBF29CE484222325ull;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001B3ull;
    }
    // run one splitmix step so adjacent seeds do not give adjacent states
    SplitMix64 mix(seed ^ h);
    return mix.next();
}

} // namespace pqmet
