#pragma once

#include <cstdint>

namespace mtcodes {

// splitmix64. Streams derived from (seed, index) are independent enough for
// candidate sampling and stay reproducible under any parallel schedule.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform draw from [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
        SplitMix64 g(a ^ (0x632BE59BD9B4E019ull + 0x9E3779B97F4A7C15ull * b));
        g.next();
        return g.next();
    }

    /// Independent stream for task `index` under a run-wide seed.
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
        return SplitMix64(mix(seed, index));
    }

  private:
    std::uint64_t state_;
};

}  // namespace mtcodes
