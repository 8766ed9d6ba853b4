#pragma once

#include <cstdint>

#include "msmx/bigint.hpp"

namespace msmx {

/// splitmix64: tiny deterministic generator, identical across platforms.
struct SplitMix64 {
    std::uint64_t state = 0;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, 2^nbits).
    BigUint next_bits(unsigned nbits) {
        BigUint v;
        unsigned words = (nbits + 63) / 64;
        for (unsigned i = 0; i < words; ++i) v.w[i] = next();
        unsigned top = nbits % 64;
        if (top) v.w[words - 1] &= (std::uint64_t{1} << top) - 1;
        return v;
    }
};

/// Stateless mix of several words; used for per-index digit streams.
inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t z = a * 0x9e3779b97f4a7c15ULL + b * 0xbf58476d1ce4e5b9ULL +
                      c * 0x94d049bb133111ebULL + 0x2545f4914f6cdd1dULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace msmx
