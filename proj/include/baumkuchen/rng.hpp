#pragma once

#include <cstdint>

namespace baumkuchen {

/// SplitMix64 (Steele, Lea, Flood). Used only to expand seeds.
class SplitMix64 {
public:
    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t operator()() noexcept
    {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// xoshiro256** 1.0 (Blackman, Vigna).
///
/// Substreams: the generator for (seed, stream) is initialised with four
/// consecutive SplitMix64 outputs whose SplitMix64 state starts at
/// seed XOR mix(stream), where mix(s) is the first SplitMix64 output for
/// state s. Distinct streams therefore start from decorrelated states and
/// a stream's sequence depends only on (seed, stream).
class Xoshiro256 {
public:
    using result_type = std::uint64_t;

    constexpr Xoshiro256(std::uint64_t seed, std::uint64_t stream) noexcept
    {
        SplitMix64 expand(seed ^ SplitMix64(stream)());
        for (auto& word : s_) {
            word = expand();
        }
    }

    /// Generator with an explicit raw state (must not be all zero).
    static constexpr Xoshiro256 from_state(std::uint64_t s0, std::uint64_t s1, std::uint64_t s2,
                                           std::uint64_t s3) noexcept
    {
        Xoshiro256 g(0, 0);
        g.s_[0] = s0;
        g.s_[1] = s1;
        g.s_[2] = s2;
        g.s_[3] = s3;
        return g;
    }

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~std::uint64_t{0}; }

    constexpr result_type operator()() noexcept
    {
        const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) from the top 53 bits.
    constexpr double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept { return (x << k) | (x >> (64 - k)); }

    std::uint64_t s_[4] = {};
};

} // namespace baumkuchen
