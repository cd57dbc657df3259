#pragma once

#include <cstdint>

namespace gf2collatz {

// splitmix64 (Steele/Lea/Vigna). Fixed algorithm so that seeded streams are
// byte-identical across platforms; std:: distributions are not portable.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased value in [0, bound) by rejection; bound > 0.
    std::uint64_t next_below(std::uint64_t bound) noexcept {
        const std::uint64_t threshold = -bound % bound;
        for (;;) {
            const std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

    int next_bit() noexcept { return static_cast<int>(next() >> 63); }

private:
    std::uint64_t state_;
};

} // namespace gf2collatz
