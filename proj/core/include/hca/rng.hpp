#pragma once

#include <cstdint>

namespace hca {

// Counter-based generator: every draw is a pure function of (seed, stream,
// index), so results do not depend on evaluation order.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return mix64(mix64(seed ^ 0x2545f4914f6cdd1dULL) ^ mix64(stream) ^ (index * 0xda942042e4dd58b5ULL));
}

// Uniform value in [0, bound) via 128-bit multiply.
inline std::uint64_t bounded(std::uint64_t raw, std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(raw) * bound) >> 64);
}

}  // namespace hca
