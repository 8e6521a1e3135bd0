// Licensed under the Apache License, Version 2.0. See LICENSE in the project root.
#pragma once

#include <cstdint>

namespace zapsim {

// SplitMix64 (Steele/Lea/Vigna). Platform-independent, so seeded runs are
// reproducible across compilers -- std::uniform_real_distribution is not.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // uniform in [0, 1)
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

// Independent substream for one unit of work (episode, grid draw, ...).
// Streams are a pure function of (master_seed, index): results do not depend
// on worker count or scheduling order.
inline SplitMix64 substream(std::uint64_t master_seed, std::uint64_t index) {
    return SplitMix64(mix64(mix64(master_seed) + 0xD1B54A32D192ED03ull * (index + 1)));
}

} // namespace zapsim
