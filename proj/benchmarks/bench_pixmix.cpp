#include <benchmark/benchmark.h>

#include "moiredb/moire.hpp"
#include "moiredb/pixmix.hpp"

using namespace moiredb;

static void BM_PixmixAugment(benchmark::State& state) {
    std::vector<GrayImage> mixing;
    for (std::uint64_t i = 0; i < 16; ++i) {
        mixing.push_back(resize_nearest(generate_moire(sample_spec(ParamRanges{}, 128, 128, i)), 32, 32));
    }
    std::vector<RgbImage> train(16, RgbImage(32, 32, 100));
    const VectorImageSource<1> mixing_source(std::move(mixing));
    const VectorImageSource<3> train_source(std::move(train));
    const UnitImage input(32, 32, 3, 0.4);
    Xoshiro256pp rng(1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pixmix_augment(input, train_source, mixing_source, rng, MixConfig{}));
    }
}
BENCHMARK(BM_PixmixAugment);

static void BM_BetaJohnk(benchmark::State& state) {
    Xoshiro256pp rng(2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(beta_johnk(rng, 3.0, 1.0));
    }
}
BENCHMARK(BM_BetaJohnk);
