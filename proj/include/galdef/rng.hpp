#pragma once

#include <cstdint>

namespace galdef {

// splitmix64: tiny deterministic generator. std::mt19937_64 would also be
// reproducible, but the standard distributions are not; this keeps sampled
// checks byte-identical across platforms.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // uniform in [0, n); n > 0
    std::uint64_t below(std::uint64_t n) { return next() % n; }
};

} // namespace galdef
