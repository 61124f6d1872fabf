#pragma once

#include <cstdint>

namespace twogon {

/// SplitMix64 finalizer (Steele, Lea, Flood 2014).
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// SplitMix64: Weyl sequence with golden-ratio increment through mix64.
/// Output is identical on every platform.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix64(state_);
    }

    /// Uniform integer in [0, 2^53); divide by 2^53 for a double in [0, 1).
    constexpr std::uint64_t next53() noexcept { return next() >> 11; }

    double uniform() noexcept { return static_cast<double>(next53()) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// Seed of chunk `index` in a run seeded with `seed`; independent of thread layout.
constexpr std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return mix64(seed ^ mix64(index + 0x632BE59BD9B4E019ULL));
}

}  // namespace twogon
