#include "moiredb/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace moiredb {

namespace {

constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
}

}  // namespace

Xoshiro256pp::Xoshiro256pp(std::uint64_t seed) noexcept {
    SplitMix64 seeder(seed);
    for (auto& word : s_) {
        word = seeder.next();
    }
}

std::uint64_t Xoshiro256pp::next() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;

    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);

    return result;
}

double uniform01(Xoshiro256pp& rng) noexcept {
    return static_cast<double>(rng.next() >> 11) * 0x1.0p-53;
}

double uniform(Xoshiro256pp& rng, double lo, double hi) noexcept {
    return lo + (hi - lo) * uniform01(rng);
}

std::uint64_t uniform_index(Xoshiro256pp& rng, std::uint64_t n) {
    if (n == 0) {
        throw std::invalid_argument("uniform_index: empty range");
    }
    // (2^64 - n) mod n, computed without overflow.
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = rng.next();
        if (r >= threshold) {
            return r % n;
        }
    }
}

bool bernoulli(Xoshiro256pp& rng, double p) noexcept {
    return uniform01(rng) < p;
}

double beta_johnk(Xoshiro256pp& rng, double alpha, double beta) {
    if (!(alpha > 0.0) || !(beta > 0.0) || !std::isfinite(alpha) || !std::isfinite(beta)) {
        throw std::invalid_argument("beta_johnk: shape parameters must be finite and positive");
    }
    for (;;) {
        const double u = uniform01(rng);
        const double v = uniform01(rng);
        const double x = std::pow(u, 1.0 / alpha);
        const double y = std::pow(v, 1.0 / beta);
        const double sum = x + y;
        if (sum > 1.0) {
            continue;
        }
        if (sum > 0.0) {
            return x / sum;
        }
        // Both powers underflowed; finish the ratio in log space.
        if (u > 0.0 && v > 0.0) {
            const double log_x = std::log(u) / alpha;
            const double log_y = std::log(v) / beta;
            const double log_m = std::max(log_x, log_y);
            const double ex = std::exp(log_x - log_m);
            const double ey = std::exp(log_y - log_m);
            return ex / (ex + ey);
        }
    }
}

}  // namespace moiredb
