#pragma once

#include <array>
#include <cstdint>

namespace moiredb {

/// SplitMix64 (Steele, Lea, Flood 2014). Used for seeding and seed derivation only.
class SplitMix64 {
public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    constexpr std::uint64_t next() noexcept {
        state_ += kGamma;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Seed of item `index` under `master_seed`: the (index + 1)-th output of a
/// SplitMix64 stream seeded with `master_seed`, computed in O(1).
constexpr std::uint64_t derive_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
    return SplitMix64::mix(master_seed + (index + 1) * SplitMix64::kGamma);
}

/// xoshiro256++ 1.0 (Blackman, Vigna). State is filled from four SplitMix64
/// outputs of the seed.
class Xoshiro256pp {
public:
    using result_type = std::uint64_t;

    explicit Xoshiro256pp(std::uint64_t seed) noexcept;

    /// Raw state constructor, for replaying reference vectors. State must not be all zero.
    static Xoshiro256pp from_state(const std::array<std::uint64_t, 4>& state) noexcept {
        Xoshiro256pp rng(0);
        rng.s_ = state;
        return rng;
    }

    std::uint64_t next() noexcept;

    // UniformRandomBitGenerator, so the stream also works with <algorithm>.
    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return ~result_type{0}; }
    result_type operator()() noexcept { return next(); }

    const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

private:
    std::array<std::uint64_t, 4> s_{};
};

// Draw helpers. Each consumes a documented number of stream outputs so that
// other implementations can replay the stream exactly.

/// Uniform on [0, 1) from the top 53 bits of one output.
double uniform01(Xoshiro256pp& rng) noexcept;

/// Uniform on [lo, hi): lo + (hi - lo) * uniform01.
double uniform(Xoshiro256pp& rng, double lo, double hi) noexcept;

/// Unbiased integer in [0, n) by rejection: outputs below (2^64 - n) mod n are
/// redrawn, the accepted output is reduced mod n. n must be >= 1.
std::uint64_t uniform_index(Xoshiro256pp& rng, std::uint64_t n);

/// True with probability p (one output: uniform01 < p).
bool bernoulli(Xoshiro256pp& rng, double p) noexcept;

/// Beta(alpha, beta) by Johnk's rejection algorithm. Each attempt consumes two
/// outputs (u then v); accept when u^(1/alpha) + v^(1/beta) <= 1.
double beta_johnk(Xoshiro256pp& rng, double alpha, double beta);

}  // namespace moiredb
