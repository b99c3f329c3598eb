#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>
#include <vector>

#include "moiredb/rng.hpp"

using namespace moiredb;

// Reference outputs below come from an independent Python transcription of the
// published SplitMix64 / xoshiro256++ reference code.

TEST(SplitMix64, MatchesReferenceSequence) {
    SplitMix64 sm(0);
    EXPECT_EQ(sm.next(), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(sm.next(), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(sm.next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64, DeriveSeedIsPositionInStream) {
    for (std::uint64_t master : {0ULL, 7ULL, 0xdeadbeefULL, ~0ULL}) {
        SplitMix64 sm(master);
        for (std::uint64_t i = 0; i < 64; ++i) {
            EXPECT_EQ(derive_seed(master, i), sm.next()) << "master=" << master << " i=" << i;
        }
    }
}

TEST(Xoshiro256pp, MatchesReferenceFromRawState) {
    auto rng = Xoshiro256pp::from_state({1, 2, 3, 4});
    EXPECT_EQ(rng.next(), 0x2800001ULL);
    EXPECT_EQ(rng.next(), 0x3800067ULL);
    EXPECT_EQ(rng.next(), 0xcc00003800067ULL);
    EXPECT_EQ(rng.next(), 0xcc201994400b2ULL);
}

TEST(Xoshiro256pp, SeedsThroughSplitMix) {
    Xoshiro256pp rng(42);
    EXPECT_EQ(rng.next(), 0xd0764d4f4476689fULL);
    EXPECT_EQ(rng.next(), 0x519e4174576f3791ULL);
    EXPECT_EQ(rng.next(), 0xfbe07cfb0c24ed8cULL);
    EXPECT_EQ(rng.next(), 0xb37d9f600cd835b8ULL);
}

TEST(Uniform, UsesTop53Bits) {
    auto a = Xoshiro256pp::from_state({1, 2, 3, 4});
    auto b = a;
    const double u = uniform01(a);
    EXPECT_EQ(u, static_cast<double>(b.next() >> 11) / 9007199254740992.0);
}

TEST(Uniform, StaysInHalfOpenInterval) {
    Xoshiro256pp rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double v = uniform(rng, 0.01, 0.05);
        ASSERT_GE(v, 0.01);
        ASSERT_LT(v, 0.05);
    }
}

TEST(UniformIndex, CoversRangeRoughlyEvenly) {
    Xoshiro256pp rng(3);
    std::array<int, 6> counts{};
    constexpr int kDraws = 60000;
    for (int i = 0; i < kDraws; ++i) {
        const auto k = uniform_index(rng, counts.size());
        ASSERT_LT(k, counts.size());
        ++counts[k];
    }
    // chi-square with 5 dof; 20.5 is the 0.999 quantile
    double chi2 = 0.0;
    const double expected = kDraws / 6.0;
    for (int c : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    EXPECT_LT(chi2, 20.5);
}

TEST(UniformIndex, SingleChoiceConsumesOneOutput) {
    Xoshiro256pp a(9);
    Xoshiro256pp b(9);
    EXPECT_EQ(uniform_index(a, 1), 0u);
    b.next();
    EXPECT_EQ(a.next(), b.next());
}

TEST(UniformIndex, RejectsEmptyRange) {
    Xoshiro256pp rng(0);
    EXPECT_THROW(uniform_index(rng, 0), std::invalid_argument);
}

TEST(BetaJohnk, MomentsMatchAnalyticValues) {
    struct Case {
        double alpha, beta;
    };
    for (const auto c : {Case{3, 1}, Case{1, 3}, Case{2, 5}, Case{0.5, 0.5}}) {
        Xoshiro256pp rng(17);
        constexpr int kDraws = 200000;
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int i = 0; i < kDraws; ++i) {
            const double x = beta_johnk(rng, c.alpha, c.beta);
            ASSERT_GE(x, 0.0);
            ASSERT_LE(x, 1.0);
            sum += x;
            sum_sq += x * x;
        }
        const double mean = sum / kDraws;
        const double var = sum_sq / kDraws - mean * mean;
        const double s = c.alpha + c.beta;
        EXPECT_NEAR(mean, c.alpha / s, 0.005) << c.alpha << "," << c.beta;
        EXPECT_NEAR(var, c.alpha * c.beta / (s * s * (s + 1)), 0.003) << c.alpha << "," << c.beta;
    }
}

TEST(BetaJohnk, SmallShapesStayFinite) {
    Xoshiro256pp rng(5);
    for (int i = 0; i < 10000; ++i) {
        const double x = beta_johnk(rng, 0.01, 0.01);
        ASSERT_TRUE(std::isfinite(x));
        ASSERT_GE(x, 0.0);
        ASSERT_LE(x, 1.0);
    }
}

TEST(BetaJohnk, RejectsBadShapes) {
    Xoshiro256pp rng(0);
    EXPECT_THROW(beta_johnk(rng, 0.0, 1.0), std::invalid_argument);
    EXPECT_THROW(beta_johnk(rng, 1.0, -2.0), std::invalid_argument);
    EXPECT_THROW(beta_johnk(rng, NAN, 1.0), std::invalid_argument);
}
