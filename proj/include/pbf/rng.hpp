#pragma once

#include <cstdint>

namespace pbf {

// Counter-based splitmix64 stream. Used everywhere randomness is needed so
// that results are reproducible across platforms and thread counts
// (std::uniform_int_distribution is implementation-defined; this is not).
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound) by rejection; bound > 0.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

// Derive an independent per-item seed from a base seed and an index.
inline uint64_t mix_seed(uint64_t seed, uint64_t index) {
    SplitMix64 s(seed ^ (0x517cc1b727220a95ULL * (index + 1)));
    return s.next();
}

} // namespace pbf
