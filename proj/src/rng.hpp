#pragma once

#include <cstdint>

namespace arclab {

// Counter-based generator: the stream state is a pure function of
// (seed, stream, counter), so trial i produces the same draws whether trials
// run serially or are farmed out, and independent substreams (distinct
// `stream` values) never share state. Core step is splitmix64.
class CounterRng {
public:
    CounterRng(std::uint64_t seed, std::uint64_t stream, std::uint64_t counter) {
        state_ = mix(seed + GOLDEN * (stream + 1));
        state_ = mix(state_ + GOLDEN * (counter + 1));
    }

    std::uint64_t next_u64() {
        state_ += GOLDEN;
        return mix(state_);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Uniform integer in [0, bound) by rejection; exact for any bound > 0.
    std::uint64_t next_below(std::uint64_t bound) {
        std::uint64_t limit = bound * (UINT64_MAX / bound);
        for (;;) {
            std::uint64_t r = next_u64();
            if (r < limit) return r % bound;
        }
    }

private:
    static constexpr std::uint64_t GOLDEN = 0x9E3779B97F4A7C15ull;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

}  // namespace arclab
