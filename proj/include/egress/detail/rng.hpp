#pragma once

#include <cstdint>
#include <vector>

namespace egress::detail {

// SplitMix64. Fixed algorithm so every benchmark table is bit-reproducible
// from its seed alone, independent of the platform's std::mt19937_64
// seeding quirks.
struct SplitMix64 {
    uint64_t state = 0;

    explicit SplitMix64(uint64_t seed = 0) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) without modulo bias (rejection sampling).
    uint64_t next_below(uint64_t bound) {
        if (bound == 0) return 0;
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t v = next();
        while (v >= limit) v = next();
        return v % bound;
    }

    // Uniform double in [0, 1).
    double next_double() { return double(next() >> 11) * 0x1.0p-53; }
};

// One secret bit stream per (seed, stream-label) pair; streams for distinct
// labels are independent.
inline SplitMix64 stream_for(uint64_t seed, uint64_t label) {
    SplitMix64 mix(seed ^ (0x9e3779b97f4a7c15ULL * (label + 1)));
    mix.next();
    return mix;
}

inline std::vector<uint8_t> random_bits(SplitMix64& rng, std::size_t n) {
    std::vector<uint8_t> bits(n);
    uint64_t word = 0;
    int left = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (left == 0) {
            word = rng.next();
            left = 64;
        }
        bits[i] = uint8_t(word & 1);
        word >>= 1;
        --left;
    }
    return bits;
}

}  // namespace egress::detail
