#pragma once

#include <cstdint>

namespace d2 {

// Counter-based deterministic generator: value(seed, index) is a pure
// function, so streams are reproducible and trivially parallelizable. The
// mixer is SplitMix64 (Steele, Lea, Flood); docs/formats.md pins the exact
// constants so independent implementations can reproduce every stream.
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline uint64_t rng_u64(uint64_t seed, uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0x9E3779B97F4A7C15ull + 0x632BE59BD9B4E019ull));
}

// Uniform in [0, bound) via 128-bit multiply; bound must be > 0. Bias is at
// most bound/2^64, negligible and documented.
inline uint64_t rng_below(uint64_t seed, uint64_t index, uint64_t bound) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(rng_u64(seed, index)) * bound) >> 64);
}

// Sequential access with an internal counter; still the same keyed stream.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed, uint64_t start_index = 0)
        : seed_(seed), index_(start_index) {}

    uint64_t next_u64() { return rng_u64(seed_, index_++); }
    uint64_t next_below(uint64_t bound) { return rng_below(seed_, index_++, bound); }
    // 53-bit mantissa double in [0,1)
    double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }
    uint64_t index() const { return index_; }

private:
    uint64_t seed_;
    uint64_t index_;
};

}  // namespace d2
