#include <benchmark/benchmark.h>

#include "moiredb/moire.hpp"
#include "moiredb/png_io.hpp"

using namespace moiredb;

static void BM_RenderPattern(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    ConcentricPatternSpec spec;
    spec.nu = 0.03;
    spec.center_x = 123.4;
    spec.center_y = 456.7;
    for (auto _ : state) {
        benchmark::DoNotOptimize(render_pattern(spec, size, size));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0));
}
BENCHMARK(BM_RenderPattern)->Arg(64)->Arg(512);

static void BM_GenerateMoire(benchmark::State& state) {
    std::uint64_t seed = 0;
    for (auto _ : state) {
        const auto spec = sample_spec(ParamRanges{}, 512, 512, derive_seed(1, seed++));
        benchmark::DoNotOptimize(generate_moire(spec));
    }
}
BENCHMARK(BM_GenerateMoire)->Unit(benchmark::kMillisecond);

static void BM_EncodePng(benchmark::State& state) {
    const GrayImage image = generate_moire(sample_spec(ParamRanges{}, 512, 512, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(encode_png(image));
    }
}
BENCHMARK(BM_EncodePng)->Unit(benchmark::kMillisecond);
