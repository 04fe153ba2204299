#pragma once

#include <cstdint>

namespace hglab {

// SplitMix64-based counter generator. Every random choice in the project is
// a pure function of (seed, stream, counter), which keeps parallel or
// re-ordered execution byte-reproducible.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Derives an independent stream key from a seed and a stream label.
inline std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t stream) {
    return mix64(mix64(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() { return mix64(state_++); }

    // Unbiased draw in [0, bound) via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        if (bound == 0) return 0;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return v % bound;
    }

    double next_unit() { return static_cast<double>(next() >> 11) * (1.0 / 9007199254740992.0); }

private:
    std::uint64_t state_;
};

}  // namespace hglab
