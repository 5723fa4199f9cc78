#pragma once

#include <cstdint>

namespace parhitchin {

// splitmix64 (Vigna). Small, fast, and identical on every platform, which is
// what the replayable-seed contract needs.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, n). Modulo bias is < 2^-23 for the field sizes in play.
    uint64_t below(uint64_t n) { return next() % n; }
};

// The fixed mixing function used to derive per-trial (and per-entry) seeds.
// Documented in the report schema: mix(a, b) = splitmix64 step applied to
// a XOR (b + 1) * 0x9e3779b97f4a7c15.
inline uint64_t mix_seed(uint64_t base, uint64_t index) {
    SplitMix64 s(base ^ ((index + 1) * 0x9e3779b97f4a7c15ULL));
    return s.next();
}

}  // namespace parhitchin
